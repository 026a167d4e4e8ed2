#pragma once

namespace tlj {

/// Strand cap for diagram enumeration and annular computations.
/// Defaults to 8; the TLJ_MAX_STRANDS environment variable overrides it.
int max_strands();

/// Cap for Jones-Wenzl construction. At least 10, raised along with
/// TLJ_MAX_STRANDS when that exceeds 10.
int jones_wenzl_cap();

} // namespace tlj
