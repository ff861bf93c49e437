//! Power-law statistics: the zeta function, the family constants, the
//! discrete MLE for the exponent, and membership verifiers for the tail
//! family and for proper power-law graphs.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::DegreeHistogram;

const EULER_MACLAURIN_TERMS: usize = 16;

// B_{2j} / (2j)! for j = 1..=7.
const BERNOULLI_OVER_FACTORIAL: [f64; 7] = [
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
];

/// Hurwitz zeta `sum_{k>=0} (q + k)^-s` for `s > 1`, `q > 0`.
///
/// Direct summation of the first terms, then the integral tail plus
/// Euler–Maclaurin corrections. Relative error is below 1e-13 for the
/// exponents used here.
pub fn hurwitz_zeta(s: f64, q: f64) -> Result<f64> {
    if !(s > 1.0) || !s.is_finite() {
        return Err(Error::Domain(format!("zeta requires s > 1, got {s}")));
    }
    if !(q > 0.0) {
        return Err(Error::Domain(format!(
            "hurwitz zeta requires q > 0, got {q}"
        )));
    }
    let mut sum = 0.0;
    for k in 0..EULER_MACLAURIN_TERMS {
        sum += (q + k as f64).powf(-s);
    }
    let a = q + EULER_MACLAURIN_TERMS as f64;
    let mut tail = a.powf(1.0 - s) / (s - 1.0) + 0.5 * a.powf(-s);
    // Rising products s (s+1) ... (s+2j-2) times a^{-s-2j+1}.
    let mut rising = s;
    let mut power = a.powf(-s - 1.0);
    for (j, coeff) in BERNOULLI_OVER_FACTORIAL.iter().enumerate() {
        tail += coeff * rising * power;
        let m = 2.0 * j as f64 + 1.0;
        rising *= (s + m) * (s + m + 1.0);
        power /= a * a;
    }
    Ok(sum + tail)
}

/// Riemann zeta for real `alpha > 1`.
pub fn zeta(alpha: f64) -> Result<f64> {
    hurwitz_zeta(alpha, 1.0)
}

/// Constants of the power-law families for a given vertex count and
/// exponent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerLawConstants {
    pub alpha: f64,
    /// Normalization, `1 / zeta(alpha)`.
    pub c: f64,
    pub n: usize,
    /// Smallest `i` with `floor(c n / i^alpha) <= 1`.
    pub i1: usize,
    /// Tail constant, at the smallest value its defining bound allows.
    pub c_prime: f64,
    /// Maximum degree of any proper power-law graph on `n` vertices.
    pub maxdeg_bound: f64,
}

impl PowerLawConstants {
    pub fn new(n: usize, alpha: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("constants require n >= 1".into()));
        }
        let c = 1.0 / zeta(alpha)?;
        let nf = n as f64;
        let mut i1 = 1usize;
        while (c * nf / (i1 as f64).powf(alpha)).floor() > 1.0 {
            i1 += 1;
        }
        let root = nf.powf(1.0 / alpha);
        let base = c / (alpha - 1.0);
        let c_prime = (base + i1 as f64 / root + 5.0).powf(alpha) + base;
        let maxdeg_bound = (base + 2.0) * root + i1 as f64 + 3.0;
        Ok(PowerLawConstants {
            alpha,
            c,
            n,
            i1,
            c_prime,
            maxdeg_bound,
        })
    }

    /// `c n / i^alpha`, the ideal number of vertices of degree `i`.
    #[inline]
    pub fn ideal_count(&self, i: usize) -> f64 {
        self.c * self.n as f64 / (i as f64).powf(self.alpha)
    }
}

/// Shorthand for [`PowerLawConstants::new`].
pub fn constants(n: usize, alpha: f64) -> Result<PowerLawConstants> {
    PowerLawConstants::new(n, alpha)
}

/// Discrete power-law exponent by the continuous-approximation MLE
/// `1 + n_tail / sum ln(d / (xmin - 1/2))` over degrees `d >= xmin`.
pub fn fit_alpha_mle(h: &DegreeHistogram, xmin: usize) -> Result<f64> {
    if xmin == 0 {
        return Err(Error::Domain("xmin must be at least 1".into()));
    }
    let shift = xmin as f64 - 0.5;
    let mut tail = 0usize;
    let mut log_sum = 0.0;
    for (d, count) in h.iter().filter(|&(d, _)| d >= xmin) {
        tail += count;
        log_sum += count as f64 * (d as f64 / shift).ln();
    }
    if tail == 0 {
        return Err(Error::EmptyTail { xmin });
    }
    Ok(1.0 + tail as f64 / log_sum)
}

/// Which membership condition a violation refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Condition {
    /// Tail bound `sum_{i>=k} |V_i| <= C' n / k^(alpha-1)`.
    Tail,
    /// Proper condition 1, on `|V_1|`.
    DegreeOne,
    /// Proper condition 2, on `|V_2|`.
    DegreeTwo,
    /// Proper condition 3: `|V_i|` is `c n / i^alpha` rounded.
    Rounded,
    /// Proper condition 4: `|V_i| >= |V_{i+1}|`.
    NonIncreasing,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::Tail => "tail",
            Condition::DegreeOne => "proper-1",
            Condition::DegreeTwo => "proper-2",
            Condition::Rounded => "proper-3",
            Condition::NonIncreasing => "proper-4",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub condition: Condition,
    /// The degree `k` or `i` at which the condition failed.
    pub index: usize,
    pub observed: f64,
    /// Allowed closed range for `observed`.
    pub allowed: (f64, f64),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} at {}: observed {} not in [{}, {}]",
            self.condition, self.index, self.observed, self.allowed.0, self.allowed.1
        )
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct MembershipReport {
    pub member: bool,
    pub violations: Vec<Violation>,
}

impl MembershipReport {
    fn from_violations(violations: Vec<Violation>) -> Self {
        MembershipReport {
            member: violations.is_empty(),
            violations,
        }
    }
}

fn check_same_n(h: &DegreeHistogram, consts: &PowerLawConstants) -> Result<()> {
    if h.vertex_count() != consts.n && h.vertex_count() != 0 {
        return Err(Error::Domain(format!(
            "constants computed for n = {} but histogram has {} vertices",
            consts.n,
            h.vertex_count()
        )));
    }
    Ok(())
}

/// Lowest degree checked by the tail condition, `ceil((n / log2 n)^(1/alpha))`.
pub fn tail_lower_limit(n: usize, alpha: f64) -> usize {
    let nf = n as f64;
    (nf / nf.log2()).powf(1.0 / alpha).ceil() as usize
}

/// Checks the tail condition for every integer `k` from
/// `ceil((n / log2 n)^(1/alpha))` to `n - 1`. Graphs with `n <= 2` are
/// members vacuously.
pub fn verify_palpha(h: &DegreeHistogram, consts: &PowerLawConstants) -> Result<MembershipReport> {
    check_same_n(h, consts)?;
    let n = h.vertex_count();
    if n <= 2 {
        return Ok(MembershipReport::from_violations(Vec::new()));
    }
    let suffix = h.suffix_counts();
    let lo = tail_lower_limit(n, consts.alpha).max(1);
    // Beyond the maximum degree every suffix count is zero.
    let hi = (n - 1).min(h.max_degree());
    let mut violations = Vec::new();
    for k in lo..=hi {
        let bound = consts.c_prime * n as f64 / (k as f64).powf(consts.alpha - 1.0);
        let observed = suffix[k] as f64;
        if observed > bound {
            violations.push(Violation {
                condition: Condition::Tail,
                index: k,
                observed,
                allowed: (0.0, bound),
            });
        }
    }
    Ok(MembershipReport::from_violations(violations))
}

/// Checks the four proper power-law conditions exactly.
pub fn verify_proper(h: &DegreeHistogram, consts: &PowerLawConstants) -> Result<MembershipReport> {
    check_same_n(h, consts)?;
    let n = h.vertex_count();
    let mut violations = Vec::new();
    if n == 0 {
        return Ok(MembershipReport::from_violations(violations));
    }
    let mut check = |condition, index, observed: usize, lo: f64, hi: f64| {
        let observed = observed as f64;
        if observed < lo || observed > hi {
            violations.push(Violation {
                condition,
                index,
                observed,
                allowed: (lo, hi),
            });
        }
    };

    let cn = consts.ideal_count(1);
    check(
        Condition::DegreeOne,
        1,
        h.count(1),
        cn.floor() - consts.i1 as f64 - 1.0,
        cn.ceil(),
    );
    let two = consts.ideal_count(2);
    check(
        Condition::DegreeTwo,
        2,
        h.count(2),
        two.floor(),
        two.ceil() + 1.0,
    );

    let dmax = h.max_degree();
    for i in 3..=n {
        let x = consts.ideal_count(i);
        if i > dmax && x < 1.0 {
            // Ideal counts keep shrinking and observed counts stay zero.
            break;
        }
        check(Condition::Rounded, i, h.count(i), x.floor(), x.ceil());
    }
    for i in 2..=(n - 1).min(dmax) {
        check(
            Condition::NonIncreasing,
            i,
            h.count(i + 1),
            0.0,
            h.count(i) as f64,
        );
    }
    Ok(MembershipReport::from_violations(violations))
}
