//! Even-index Bernoulli numbers as exact rationals.

use std::sync::LazyLock;

/// Largest `k` for which `B_{2k}` is tabulated.
pub const MAX_INDEX: usize = 31;

/// `(numerator, denominator)` of `B_{2k}` for `k = 1..=31` (`B_2` through `B_62`).
/// Numerators beyond `B_58` overflow `i128`, so all are kept as decimal text.
const EVEN_BERNOULLI: [(&str, u64); MAX_INDEX] = [
    ("1", 6),
    ("-1", 30),
    ("1", 42),
    ("-1", 30),
    ("5", 66),
    ("-691", 2730),
    ("7", 6),
    ("-3617", 510),
    ("43867", 798),
    ("-174611", 330),
    ("854513", 138),
    ("-236364091", 2730),
    ("8553103", 6),
    ("-23749461029", 870),
    ("8615841276005", 14322),
    ("-7709321041217", 510),
    ("2577687858367", 6),
    ("-26315271553053477373", 1919190),
    ("2929993913841559", 6),
    ("-261082718496449122051", 13530),
    ("1520097643918070802691", 1806),
    ("-27833269579301024235023", 690),
    ("596451111593912163277961", 282),
    ("-5609403368997817686249127547", 46410),
    ("495057205241079648212477525", 66),
    ("-801165718135489957347924991853", 1590),
    ("29149963634884862421418123812691", 798),
    ("-2479392929313226753685415739663229", 870),
    ("84483613348880041862046775994036021", 354),
    ("-1215233140483755572040304994079820246041491", 56786730),
    ("12300585434086858541953039857403386151", 6),
];

fn to_f64((num, den): (&str, u64)) -> f64 {
    num.parse::<f64>().expect("tabulated numerator") / den as f64
}

static VALUES: LazyLock<[f64; MAX_INDEX]> =
    LazyLock::new(|| std::array::from_fn(|i| to_f64(EVEN_BERNOULLI[i])));

/// `B_{2k}` rounded to double precision, `1 <= k <= 31`.
pub fn even(k: usize) -> f64 {
    assert!(
        (1..=MAX_INDEX).contains(&k),
        "B_2k is tabulated for 1 <= k <= {MAX_INDEX}"
    );
    VALUES[k - 1]
}

/// Exact text form of `B_{2k}`.
pub fn even_exact(k: usize) -> (&'static str, u64) {
    EVEN_BERNOULLI[k - 1]
}
