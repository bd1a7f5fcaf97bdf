//! Versioned verification defaults.
//!
//! Every threshold, order and registered oracle value used by the
//! verification suites lives here, so a clean checkout reproduces the
//! acceptance runs exactly. Registered floating-point values were produced
//! by the independent log-space product evaluator in the test suite and
//! are pinned to 1e-12 relative agreement.

#![allow(clippy::excessive_precision)] // registered oracle digits kept verbatim

/// Default integer truncation order for series work.
pub const DEFAULT_ORDER: i64 = 30;

/// Truncation order for the J-function route agreement check.
pub const J_AGREEMENT_ORDER: i64 = 20;

/// Evaluation grid for the divergence check of the inequality chain.
pub const INEQUALITY_GRID: [f64; 5] = [0.5, 0.7, 0.9, 0.95, 0.99];

/// Relative tolerance against the registered oracle values below.
pub const GRID_RELATIVE_TOL: f64 = 1e-12;

/// Registered value of `∏_{n>=1}(1 - q^n)` at `q = 1/2` (the convergent
/// value; the direct product matches it to ~5 ulp).
pub const ETA_PRODUCT_AT_HALF: f64 = 0.288_788_095_086_602_4;

/// Registered values of the ratio lower bound
/// `r(q) = (3·2^47)^{-1} ∏(1+q^{n+1/2})^{-1} ∏_{n>=2}(1-q^n)^{-1}`
/// on [`INEQUALITY_GRID`], in grid order.
pub const RATIO_GRID_VALUES: [f64; 5] = [
    1.270_020_433_896_348_3e-15,
    1.686_015_680_794_741_8e-15,
    7.515_564_100_444_300_4e-14,
    9.832_182_415_303_726_3e-11,
    3.286_791_684_939_303e17,
];

/// Registered lower threshold for `r(0.99)/r(0.5)`; the measured growth
/// factor (oracle value 2.588e32) must exceed it.
pub const RATIO_GROWTH_THRESHOLD: f64 = 1e32;

/// Registered `ln g(q)` values of the tensor-factor comparison function on
/// [`INEQUALITY_GRID`].
pub const F_BOUND_LN_LOWER: [f64; 5] = [
    2.375_418_618_375_119_45e1,
    7.776_678_752_476_189_52e1,
    3.455_778_062_217_934_23e2,
    7.477_162_397_004_893_82e2,
    3.969_501_958_196_338_82e3,
];

/// Registered domination margins `ln f(q) - ln g(q) > 0` on the grid.
pub const F_BOUND_MARGINS: [f64; 5] = [
    1.853_782_144_779_536_18,
    6.575_859_355_492_647e-2,
    4.487_682_658_934_98e-9,
    8.539_034_071_579_055e-20,
    1.590_125_578_446_938_5e-105,
];

/// Weight-4 codeword count of the \[48,41\] code, cross-checked by direct
/// scan and by the MacWilliams transform of the dual enumerator.
pub const C_WEIGHT4_COUNT: u64 = 3300;

/// Number of moonshine module labels.
pub const LABEL_COUNT: u64 = 16384;

/// Budget (seconds) for the default assignment search.
pub const SEARCH_BUDGET_SECS: u64 = 600;

/// Default order for the assignment-search character match.
pub const SEARCH_MAX_ORDER: i64 = 4;
