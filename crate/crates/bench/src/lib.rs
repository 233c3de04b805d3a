//! Fixtures shared by the benchmark target in `benches/kernels.rs`.

/// A spread of index strings covering every simple type: split and
/// anisotropic forms, twisted forms, declared division degrees, and the
/// full-rank exceptional diagrams that dominate enumeration cost.
pub const INDEX_FIXTURES: &[&str] = &[
    "^1A1:[1]",
    "^1A7(4):[4]",
    "^1A15(8):[8]",
    "^2A8(3):[3,6]",
    "^1B8:[1,2,3,4,5,6,7,8]",
    "^1C6(2):[2]",
    "^1D8:[2,4,6,8]",
    "^2D8(2):[2,4,6]",
    "^3D4:[2]:(1 3 4)",
    "^6D4:[1,3,4]:(1 3 4)",
    "^1E6:[2,4]",
    "^2E6:[1,2,6]",
    "^1E7:[1,6]",
    "^1E8:[8]",
    "^1F4:[1]",
    "^1G2:[1,2]",
];

/// (index, isogeny, field) triples exercised by the classification
/// benchmark: one verdict of every class.
pub const CLASSIFY_FIXTURES: &[(&str, &str, &str)] = &[
    ("^1G2:[1,2]", "sc", "general"),
    ("^2E6:[2,4]", "adjoint", "general"),
    ("^1A7(4):[4]", "sc", "general"),
    ("^1E7:[7]", "sc", "general"),
    ("^2D8(2):[2,4,6]", "adjoint", "padic"),
    ("^1E8:[8]", "sc", "real"),
];
