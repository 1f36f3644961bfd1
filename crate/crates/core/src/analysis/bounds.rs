use std::fmt;
use std::str::FromStr;

use num_integer::binomial;
use num_rational::Ratio;
use num_traits::Zero;
use serde::{Serialize, Serializer};
use thiserror::Error;

type Q = Ratio<i128>;

fn q(x: i128) -> Q {
    Q::from_integer(x)
}

fn ratio_str<S: Serializer>(r: &Q, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// The score theorems with a bound evaluator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Theorem {
    /// `P_k` when Prolonger may pass.
    PassPath,
    Path4,
    Path5,
    /// The family of all trees on `k` vertices.
    Trees,
    /// The star `K_{1,k+1}`.
    Star,
}

impl Theorem {
    pub const ALL: [Theorem; 5] = [Theorem::PassPath, Theorem::Path4, Theorem::Path5, Theorem::Trees, Theorem::Star];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::PassPath => "pass-path",
            Theorem::Path4 => "p4",
            Theorem::Path5 => "p5",
            Theorem::Trees => "trees",
            Theorem::Star => "star",
        }
    }

    pub fn needs_k(self) -> bool {
        matches!(self, Theorem::PassPath | Theorem::Trees | Theorem::Star)
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = BoundError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.name() == s.trim())
            .ok_or_else(|| BoundError::UnknownTheorem(s.to_string()))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundError {
    #[error("unknown theorem {0:?}")]
    UnknownTheorem(String),
    #[error("{theorem} needs a value for k")]
    MissingK { theorem: Theorem },
    #[error("{theorem} does not apply at n = {n}, k = {k:?}: requires {requirement}")]
    Domain {
        theorem: Theorem,
        n: usize,
        k: Option<usize>,
        requirement: &'static str,
    },
}

/// Two-sided bound on a score, optionally compared with an observed value.
/// `holds` is true when nothing has been observed yet.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub theorem: Theorem,
    pub n: usize,
    pub k: Option<usize>,
    #[serde(serialize_with = "ratio_str")]
    pub lower: Q,
    #[serde(serialize_with = "ratio_str")]
    pub upper: Q,
    pub observed: Option<usize>,
    pub holds: bool,
}

impl BoundReport {
    pub fn with_observed(mut self, observed: usize) -> Self {
        let x = q(observed as i128);
        self.observed = Some(observed);
        self.holds = self.lower <= x && x <= self.upper;
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Tree-family score: exact unless `n = 1 (mod k-1)` with `k >= 3`, where
/// only an interval is known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TreeScore {
    Exact(usize),
    Interval(Q, Q),
}

impl TreeScore {
    pub fn bounds(&self) -> (Q, Q) {
        match self {
            TreeScore::Exact(v) => (q(*v as i128), q(*v as i128)),
            TreeScore::Interval(a, b) => (*a, *b),
        }
    }
}

pub fn tree_score_formula(n: usize, k: usize) -> TreeScore {
    assert!(k >= 2, "tree family needs k >= 2");
    let c = k - 1;
    if k >= 3 && n % c == 1 {
        let top = Q::new(n as i128, c as i128) * q(binomial(c as i128, 2));
        return TreeScore::Interval(top - q(k as i128 - 3), top);
    }
    let full = n / c;
    TreeScore::Exact(full * binomial(c, 2) + binomial(n - c * full, 2))
}

/// The interval case with `floor(n/(k-1))` in place of `n/(k-1)`: the
/// largest saturated graph, `floor(n/(k-1))` copies of `K_{k-1}` and an
/// isolated vertex, and `k - 3` below it.
pub fn tree_score_interval_floored(n: usize, k: usize) -> (usize, usize) {
    assert!(k >= 3, "interval case needs k >= 3");
    let top = n / (k - 1) * binomial(k - 1, 2);
    (top.saturating_sub(k - 3), top)
}

fn domain(theorem: Theorem, n: usize, k: Option<usize>, ok: bool, requirement: &'static str) -> Result<(), BoundError> {
    if ok {
        Ok(())
    } else {
        Err(BoundError::Domain { theorem, n, k, requirement })
    }
}

/// The printed bounds of each theorem at `(n, k)`.
pub fn bound(theorem: Theorem, n: usize, k: Option<usize>) -> Result<BoundReport, BoundError> {
    let kk = match (theorem.needs_k(), k) {
        (true, None) => return Err(BoundError::MissingK { theorem }),
        (true, Some(k)) => k,
        (false, _) => 0,
    };
    let k = if theorem.needs_k() { Some(kk) } else { None };
    domain(theorem, n, k, n >= 1, "n >= 1")?;
    let (ni, ki) = (n as i128, kk as i128);
    let (lower, upper) = match theorem {
        Theorem::PassPath => {
            domain(theorem, n, k, kk >= 2, "k >= 2")?;
            domain(theorem, n, k, n >= kk, "n >= k")?;
            (Q::new(ni * (ki - 2), 4), Q::new(ni * (ki - 1), 2))
        }
        Theorem::Path4 => (Q::new(4 * ni - 8, 5), Q::new(4 * ni + 5, 5)),
        Theorem::Path5 => (q(ni - 1), q(ni + 2)),
        Theorem::Trees => {
            domain(theorem, n, k, kk >= 2, "k >= 2")?;
            tree_score_formula(n, kk).bounds()
        }
        Theorem::Star => {
            domain(theorem, n, k, kk >= 1, "k >= 1")?;
            domain(theorem, n, k, ni >= (3 * ki + 1) * (ki - 2), "n >= (3k+1)(k-2)")?;
            (Q::new(ki * ni - 2 * (ki - 1), 2), Q::new(ki * ni, 2))
        }
    };
    Ok(BoundReport {
        theorem,
        n,
        k,
        lower,
        upper,
        observed: None,
        holds: true,
    })
}

/// Maximum edge count of a `P_k`-free graph on `n` vertices when `k - 1`
/// divides `n`, i.e. disjoint copies of `K_{k-1}`: `n(k-2)/2`. Compare with
/// the upper bound `n(k-1)/2` used for the pass game.
pub fn erdos_gallai_max(n: usize, k: usize) -> Q {
    Q::new(n as i128 * (k as i128 - 2), 2)
}

/// Edge lower bound for a graph whose components are cliques on fewer than
/// `k` vertices with any two of them together at least `k`, given minimum
/// degree `delta`: `[max(k-2-2d, 0)(n-d-1) + dn] / 2`.
pub fn degree_sum_bound(n: usize, k: usize, delta: usize) -> Q {
    let (n, k, d) = (n as i128, k as i128, delta as i128);
    Q::new((k - 2 - 2 * d).max(0) * (n - d - 1) + d * n, 2)
}

/// The same bound in its two-sided form
/// `[max(k-2-d, d)(n-d-1) + d(d+1)] / 2`.
pub fn degree_sum_bound_two_sided(n: usize, k: usize, delta: usize) -> Q {
    let (n, k, d) = (n as i128, k as i128, delta as i128);
    Q::new((k - 2 - d).max(d) * (n - d - 1) + d * (d + 1), 2)
}

/// `floor((k-2)/2)`, the minimum degree minimizing [`degree_sum_bound`]
/// when `n >= k`.
pub fn degree_sum_minimizer(k: usize) -> usize {
    k.saturating_sub(2) / 2
}

/// `f_0, ..., f_{k-1}` from `f_0 = 0`,
/// `f_{i+1} = f_i + (n + 2k + 2) - 2 f_i / (k - i)`.
pub fn f_sequence(n: usize, k: usize) -> Vec<Q> {
    assert!(k >= 2, "sequence needs k >= 2");
    let c = q(n as i128 + 2 * k as i128 + 2);
    let mut f = vec![Q::zero()];
    for i in 0..k - 1 {
        let fi = f[i];
        f.push(fi + c - fi * q(2) / q((k - i) as i128));
    }
    f
}

/// `i (n + 2k + 2) (k - i) / (k - 1)`.
pub fn f_closed(n: usize, k: usize, i: usize) -> Q {
    assert!(k >= 2, "closed form needs k >= 2");
    let (n, k, i) = (n as i128, k as i128, i as i128);
    Q::new(i * (n + 2 * k + 2) * (k - i), k - 1)
}
