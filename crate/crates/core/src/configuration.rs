//! Points of the fiber `(P^1)^N` over a fixed line bundle, and the `C^*`-action
//! `[x0 : x1] -> [c x0 : x1]` on them.
//!
//! Indices are zero-based throughout.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::Scalar;
use crate::error::{Error, Result};
use crate::stability::{Label, LabeledPartition, ModuliParams};

/// A point of `P^1`: the two fixed sections or an affine coordinate `t = x0/x1 != 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum FiberPoint {
    /// `[0:1]`; `gamma` vanishes at the corresponding zero of `q`.
    Zero,
    /// `[1:0]`; `beta` vanishes.
    Infinity,
    Finite(Scalar),
}

impl FiberPoint {
    pub fn finite(t: Scalar) -> Result<Self> {
        if t.is_zero() {
            return Err(Error::Precondition(
                "finite fiber coordinate must be nonzero".into(),
            ));
        }
        Ok(FiberPoint::Finite(t))
    }

    pub fn is_marked(&self) -> bool {
        !matches!(self, FiberPoint::Finite(_))
    }

    pub fn coordinate(&self) -> Option<&Scalar> {
        match self {
            FiberPoint::Finite(t) => Some(t),
            _ => None,
        }
    }

    /// Homogeneous coordinates `(x0, x1)`.
    pub fn homogeneous(&self) -> (Scalar, Scalar) {
        match self {
            FiberPoint::Zero => (Scalar::zero(), Scalar::one()),
            FiberPoint::Infinity => (Scalar::one(), Scalar::zero()),
            FiberPoint::Finite(t) => (t.clone(), Scalar::one()),
        }
    }
}

impl fmt::Debug for FiberPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiberPoint::Zero => f.write_str("Zero"),
            FiberPoint::Infinity => f.write_str("Infinity"),
            FiberPoint::Finite(t) => write!(f, "Finite({t})"),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum FiberPointRepr {
    Marked(String),
    Finite { t: Scalar },
}

impl Serialize for FiberPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let repr = match self {
            FiberPoint::Zero => FiberPointRepr::Marked("zero".into()),
            FiberPoint::Infinity => FiberPointRepr::Marked("inf".into()),
            FiberPoint::Finite(t) => FiberPointRepr::Finite { t: t.clone() },
        };
        repr.serialize(s)
    }
}

impl<'de> Deserialize<'de> for FiberPoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        match FiberPointRepr::deserialize(d)? {
            FiberPointRepr::Marked(s) => match s.as_str() {
                "zero" => Ok(FiberPoint::Zero),
                "inf" => Ok(FiberPoint::Infinity),
                other => Err(D::Error::custom(format!(
                    "expected \"zero\", \"inf\" or {{\"t\": ...}}, got \"{other}\""
                ))),
            },
            FiberPointRepr::Finite { t } => FiberPoint::finite(t).map_err(D::Error::custom),
        }
    }
}

/// A base label standing for `L in Pic^d X` plus one point of `P^1` per zero of `q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Configuration {
    pub base: String,
    pub points: Vec<FiberPoint>,
}

impl Configuration {
    pub fn new(base: impl Into<String>, points: Vec<FiberPoint>) -> Self {
        Configuration {
            base: base.into(),
            points,
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Every slot is `Zero` or `Infinity`; exactly the fixed points of the action.
    pub fn is_fully_marked(&self) -> bool {
        self.points.iter().all(FiberPoint::is_marked)
    }

    pub fn check_len(&self, expected: usize) -> Result<()> {
        if self.len() != expected {
            return Err(Error::LengthMismatch {
                expected,
                found: self.len(),
            });
        }
        Ok(())
    }
}

/// Index sets of the slots at `[0:1]` (`j1`) and at `[1:0]` (`j2`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkData {
    pub j1: Vec<usize>,
    pub j2: Vec<usize>,
}

impl MarkData {
    pub fn n1(&self) -> usize {
        self.j1.len()
    }

    pub fn n2(&self) -> usize {
        self.j2.len()
    }
}

pub fn mark_data(c: &Configuration) -> MarkData {
    let mut j1 = Vec::new();
    let mut j2 = Vec::new();
    for (j, pt) in c.points.iter().enumerate() {
        match pt {
            FiberPoint::Zero => j1.push(j),
            FiberPoint::Infinity => j2.push(j),
            FiberPoint::Finite(_) => {}
        }
    }
    MarkData { j1, j2 }
}

/// Membership in the stable locus: `n1 < 2(g-1+d)` and `n2 < 2(g-1-d)`.
pub fn in_y(c: &Configuration, p: &ModuliParams) -> Result<bool> {
    c.check_len(p.num_points())?;
    let m = mark_data(c);
    Ok((m.n1() as i64) < p.gamma_bound() && (m.n2() as i64) < p.beta_bound())
}

/// `Zero -> Gamma`, `Infinity -> Beta`, `Finite -> Rest`.
pub fn stratum_of(c: &Configuration) -> LabeledPartition {
    LabeledPartition::new(
        c.points
            .iter()
            .map(|pt| match pt {
                FiberPoint::Zero => Label::Gamma,
                FiberPoint::Infinity => Label::Beta,
                FiberPoint::Finite(_) => Label::Rest,
            })
            .collect(),
    )
}

/// `sigma(scale, c)`: finite coordinates are multiplied by `scale`.
pub fn act(scale: &Scalar, c: &Configuration) -> Result<Configuration> {
    if scale.is_zero() {
        return Err(Error::InvalidScale);
    }
    let points = c
        .points
        .iter()
        .map(|pt| match pt {
            FiberPoint::Finite(t) => FiberPoint::Finite(t * scale),
            marked => marked.clone(),
        })
        .collect();
    Ok(Configuration {
        base: c.base.clone(),
        points,
    })
}

/// The scalar `s` with `act(s, a) == b`, if any. Fully marked configurations
/// are fixed, so the answer there is `1` exactly when `a == b`.
pub fn orbit_equivalent(a: &Configuration, b: &Configuration) -> Option<Scalar> {
    if a.base != b.base || a.len() != b.len() {
        return None;
    }
    let mut ratio: Option<Scalar> = None;
    for (x, y) in a.points.iter().zip(&b.points) {
        match (x, y) {
            (FiberPoint::Zero, FiberPoint::Zero) | (FiberPoint::Infinity, FiberPoint::Infinity) => {}
            (FiberPoint::Finite(s), FiberPoint::Finite(t)) => {
                let r = t.checked_div(s).ok()?;
                match &ratio {
                    None => ratio = Some(r),
                    Some(r0) if *r0 == r => {}
                    Some(_) => return None,
                }
            }
            _ => return None,
        }
    }
    Some(ratio.unwrap_or_else(Scalar::one))
}

/// Fixed point in the orbit closure of a configuration that saturates one of
/// the semistability bounds for exponent `n`: with `n1 == n` every unmarked
/// slot goes to `Infinity` (scale to infinity), otherwise with `n2 == N - n`
/// every unmarked slot goes to `Zero` (scale to zero).
pub fn limit_point_for_exponent(c: &Configuration, n: usize) -> Result<Configuration> {
    let big_n = c.len();
    if n > big_n {
        return Err(Error::InvalidLinearization { n: n as i64, big_n });
    }
    let m = mark_data(c);
    let semistable = m.n1() <= n && m.n2() <= big_n - n;
    let target = if !semistable {
        None
    } else if m.n1() == n {
        Some(FiberPoint::Infinity)
    } else if m.n2() == big_n - n {
        Some(FiberPoint::Zero)
    } else {
        None
    };
    let target = target.ok_or(Error::NotOnBoundary)?;
    let points = c
        .points
        .iter()
        .map(|pt| {
            if pt.is_marked() {
                pt.clone()
            } else {
                target.clone()
            }
        })
        .collect();
    Ok(Configuration {
        base: c.base.clone(),
        points,
    })
}

/// [`limit_point_for_exponent`] with `n = 2(g-1+d)`.
pub fn limit_point(c: &Configuration, p: &ModuliParams) -> Result<Configuration> {
    c.check_len(p.num_points())?;
    let n = p.linearization_exponent();
    if n < 0 || n as usize > p.num_points() {
        return Err(Error::InvalidLinearization {
            n,
            big_n: p.num_points(),
        });
    }
    limit_point_for_exponent(c, n as usize)
}

/// Index sets of one standard affine chart containing a stable configuration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineChart {
    /// `2(g-1+d) - 1` slots that avoid `Infinity`.
    pub i1: Vec<usize>,
    /// `2(g-1-d) - 1` slots that avoid `Zero`.
    pub i2: Vec<usize>,
    /// Two slots that avoid both.
    pub i3: Vec<usize>,
}

/// Deterministic chart choice: `i3` takes the two lowest finite slots, `i1`
/// takes every `Zero` slot and is topped up with the lowest remaining finite
/// slots, `i2` gets what is left.
pub fn affine_chart(c: &Configuration, p: &ModuliParams) -> Result<AffineChart> {
    if !in_y(c, p)? {
        return Err(Error::NoChart);
    }
    let size1 = (p.gamma_bound() - 1) as usize;
    let finite: Vec<usize> = (0..c.len()).filter(|&j| !c.points[j].is_marked()).collect();
    // in_y guarantees at least two finite slots
    let i3: Vec<usize> = finite[..2].to_vec();
    let mut i1: Vec<usize> = mark_data(c).j1;
    for &j in &finite[2..] {
        if i1.len() >= size1 {
            break;
        }
        i1.push(j);
    }
    i1.sort_unstable();
    let i2: Vec<usize> = (0..c.len())
        .filter(|j| !i3.contains(j) && !i1.contains(j))
        .collect();
    let chart = AffineChart { i1, i2, i3 };
    debug_assert!(chart_admits(&chart, c, p));
    Ok(chart)
}

/// Checks the chart's size and membership conditions against `c`.
pub fn chart_admits(chart: &AffineChart, c: &Configuration, p: &ModuliParams) -> bool {
    let sizes_ok = chart.i1.len() as i64 == p.gamma_bound() - 1
        && chart.i2.len() as i64 == p.beta_bound() - 1
        && chart.i3.len() == 2;
    let mut seen = vec![false; c.len()];
    for &j in chart.i1.iter().chain(&chart.i2).chain(&chart.i3) {
        if j >= c.len() || seen[j] {
            return false;
        }
        seen[j] = true;
    }
    sizes_ok
        && seen.iter().all(|&s| s)
        && chart.i1.iter().all(|&j| c.points[j] != FiberPoint::Infinity)
        && chart.i2.iter().all(|&j| c.points[j] != FiberPoint::Zero)
        && chart.i3.iter().all(|&j| !c.points[j].is_marked())
}

/// Torus parameters `b_j` of the finite slots, identified with the affine
/// coordinate under a fixed trivialization of `L^3` at `x_j`.
pub fn param_from_config(c: &Configuration) -> BTreeMap<usize, Scalar> {
    c.points
        .iter()
        .enumerate()
        .filter_map(|(j, pt)| pt.coordinate().map(|t| (j, t.clone())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use FiberPoint::{Infinity as I, Zero as Z};

    fn f(n: i64) -> FiberPoint {
        FiberPoint::Finite(Scalar::from_int(n))
    }

    fn cfg(points: Vec<FiberPoint>) -> Configuration {
        Configuration::new("L0", points)
    }

    fn p(g: i64, d: i64) -> ModuliParams {
        ModuliParams::new(g, d).unwrap()
    }

    #[test]
    fn finite_rejects_zero() {
        assert!(FiberPoint::finite(Scalar::zero()).is_err());
    }

    #[test]
    fn mark_data_examples() {
        let m = mark_data(&cfg(vec![f(1); 4]));
        assert_eq!((m.j1.len(), m.j2.len()), (0, 0));
        let m = mark_data(&cfg(vec![Z, Z, I, f(3)]));
        assert_eq!(
            m,
            MarkData {
                j1: vec![0, 1],
                j2: vec![2]
            }
        );
        assert_eq!(mark_data(&cfg(vec![Z; 4])).n1(), 4);
    }

    #[test]
    fn in_y_examples() {
        assert!(in_y(&cfg(vec![Z, I, f(1), f(2)]), &p(2, 0)).unwrap());
        assert!(!in_y(&cfg(vec![Z, Z, f(1), f(2)]), &p(2, 0)).unwrap());
        assert!(!in_y(&cfg(vec![f(1); 4]), &p(2, 1)).unwrap());
        assert!(in_y(&cfg(vec![f(1); 3]), &p(2, 0)).is_err());
    }

    #[test]
    fn stratum_examples() {
        let s = stratum_of(&cfg(vec![Z, I, f(1), f(2)]));
        assert_eq!(
            s.assignment(),
            &[Label::Gamma, Label::Beta, Label::Rest, Label::Rest]
        );
        assert_eq!(stratum_of(&cfg(vec![f(1); 4])).d_rest(), 4);
        assert_eq!(stratum_of(&cfg(vec![Z; 4])).d_gamma(), 4);
    }

    #[test]
    fn action_examples() {
        let c = cfg(vec![f(3), Z]);
        assert_eq!(act(&Scalar::one(), &c).unwrap(), c);
        assert_eq!(act(&Scalar::from_int(2), &c).unwrap(), cfg(vec![f(6), Z]));
        let x = cfg(vec![f(5), I, f(-2)]);
        let (a, b) = (Scalar::frac(3, 7), Scalar::sqrt2());
        assert_eq!(
            act(&a, &act(&b, &x).unwrap()).unwrap(),
            act(&(&a * &b), &x).unwrap()
        );
        assert_eq!(act(&Scalar::zero(), &c), Err(Error::InvalidScale));
    }

    #[test]
    fn orbit_examples() {
        let a = cfg(vec![f(1), f(2), Z, I]);
        let b = cfg(vec![f(3), f(6), Z, I]);
        assert_eq!(orbit_equivalent(&a, &b), Some(Scalar::from_int(3)));
        let b = cfg(vec![f(2), f(2), Z, I]);
        assert_eq!(orbit_equivalent(&a, &b), None);
        let fixed = cfg(vec![Z, Z, I, I]);
        assert_eq!(orbit_equivalent(&fixed, &fixed), Some(Scalar::one()));
        assert_eq!(orbit_equivalent(&fixed, &cfg(vec![Z, I, Z, I])), None);
        let other_base = Configuration::new("L1", a.points.clone());
        assert_eq!(orbit_equivalent(&a, &other_base), None);
    }

    #[test]
    fn limit_point_examples() {
        let m = p(2, 0);
        assert_eq!(
            limit_point(&cfg(vec![Z, Z, f(5), I]), &m).unwrap(),
            cfg(vec![Z, Z, I, I])
        );
        let fixed = cfg(vec![Z, Z, I, I]);
        assert_eq!(limit_point(&fixed, &m).unwrap(), fixed);
        // n2 = N - n: unmarked slots scale to zero, the Infinity slots stay put
        assert_eq!(
            limit_point(&cfg(vec![I, I, f(1), f(2)]), &m).unwrap(),
            cfg(vec![I, I, Z, Z])
        );
        assert_eq!(
            limit_point(&cfg(vec![Z, I, f(1), f(2)]), &m),
            Err(Error::NotOnBoundary)
        );
        assert_eq!(
            limit_point(&cfg(vec![Z, Z, Z, f(2)]), &m),
            Err(Error::NotOnBoundary)
        );
    }

    #[test]
    fn chart_examples() {
        let m = p(2, 0);
        let c = cfg(vec![Z, I, f(1), f(2)]);
        let ch = affine_chart(&c, &m).unwrap();
        assert_eq!(
            ch,
            AffineChart {
                i1: vec![0],
                i2: vec![1],
                i3: vec![2, 3]
            }
        );
        let c = cfg(vec![f(1); 4]);
        let ch = affine_chart(&c, &m).unwrap();
        assert_eq!(ch.i3, vec![0, 1]);
        assert!(chart_admits(&ch, &c, &m));
        assert_eq!(
            affine_chart(&cfg(vec![Z, Z, f(1), f(2)]), &m),
            Err(Error::NoChart)
        );
    }

    #[test]
    fn chart_puts_late_zero_in_i1() {
        // a greedy lowest-index fill of i1 would take slot 2 and strand the Zero at slot 7
        let m = p(3, 0);
        let c = cfg(vec![f(1), f(2), f(3), f(4), I, f(5), f(6), Z]);
        let ch = affine_chart(&c, &m).unwrap();
        assert!(ch.i1.contains(&7));
        assert!(chart_admits(&ch, &c, &m));
    }

    #[test]
    fn params_follow_the_action() {
        let c = cfg(vec![f(3), Z]);
        assert_eq!(param_from_config(&c), BTreeMap::from([(0, Scalar::from_int(3))]));
        let x = cfg(vec![f(3), I, f(-5)]);
        let doubled = param_from_config(&act(&Scalar::from_int(2), &x).unwrap());
        for (j, b) in param_from_config(&x) {
            assert_eq!(doubled[&j], &b * &Scalar::from_int(2));
        }
        assert!(param_from_config(&cfg(vec![Z, I])).is_empty());
    }

    #[test]
    fn json_format() {
        let c = cfg(vec![Z, I, FiberPoint::Finite(Scalar::frac(3, 2))]);
        let j = serde_json::to_string(&c).unwrap();
        assert_eq!(j, r#"{"base":"L0","points":["zero","inf",{"t":"3/2"}]}"#);
        assert_eq!(serde_json::from_str::<Configuration>(&j).unwrap(), c);
        assert!(serde_json::from_str::<Configuration>(r#"{"base":"L","points":["nope"]}"#).is_err());
        assert!(serde_json::from_str::<Configuration>(r#"{"base":"L","points":[{"t":"0"}]}"#).is_err());
    }
}
