//! Numerical checks of the proof steps: the difference polynomial `f`, the
//! edge surgery turning `G₃` into `G₄`, and the clique-merging bounds.

use super::exact::{ceil_to_usize, check_unit_interval, floor_to_usize, to_f64};
use super::{min_order_exact, RADIUS_TOL};
use crate::error::{Error, Result};
use crate::graph::{build_join_union, edge, Edge, Graph, JoinUnionSpec};
use crate::spectral::{perron_pair, quadratic_form_delta, Alpha};
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed};
use serde::Serialize;
use std::ops::RangeInclusive;

fn f_generic<T: Num + Clone + FromPrimitive>(n: T, d: T, s: T, a: T, x: T) -> T {
    let k = |v: i64| T::from_i64(v).expect("small integer");
    let a2 = a.clone() * a.clone();
    let p1 = k(2) * a2.clone() - k(2) * a.clone() + k(1);
    let p2 = a2.clone() - k(3) * a.clone() + k(1);
    let p3 = k(3) * a2.clone() - k(5) * a.clone() + k(2);
    let p4 = k(3) * a2.clone() - k(6) * a.clone() + k(2);
    let one_minus = k(1) - a;

    one_minus.clone() * x.clone() * x.clone()
        + (a2.clone() * n.clone() - s.clone() - d.clone() + k(2) * one_minus) * x
        - a2 * n.clone() * n.clone()
        + p1.clone() * s.clone() * n.clone()
        + p1 * d.clone() * n.clone()
        - p2 * n
        - p3.clone() * s.clone() * s.clone()
        - p3.clone() * s.clone() * d.clone()
        + p4.clone() * s
        - p3 * d.clone() * d.clone()
        + p4 * d
}

/// `f(x)` with `(φ_{B₂} − φ_{B*})(x) = (s − δ)·f(x)`, where `B₂` and `B*` are
/// the three-cell quotients of `K_s ∨ (K_{n−2s+1} ∪ (s−1)K_1)` and
/// `K_δ ∨ (K_{n−2δ+1} ∪ (δ−1)K_1)`:
///
/// ```text
/// f(x) = (1−α)x² + (α²n − s − δ + 2(1−α))x − α²n²
///        + (2α²−2α+1)sn + (2α²−2α+1)δn − (α²−3α+1)n
///        − (3α²−5α+2)s² − (3α²−5α+2)sδ + (3α²−6α+2)s
///        − (3α²−5α+2)δ² + (3α²−6α+2)δ
/// ```
pub fn f_case1(n: usize, delta: usize, s: usize, a: Alpha, x: f64) -> f64 {
    f_generic(n as f64, delta as f64, s as f64, a.value(), x)
}

/// [`f_case1`] in exact arithmetic.
pub fn f_case1_exact(n: usize, delta: usize, s: usize, a: &BigRational, x: &BigRational) -> BigRational {
    let int = |v: usize| BigRational::from_integer(v.into());
    f_generic(int(n), int(delta), int(s), a.clone(), x.clone())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SubcaseViolation {
    /// Exact α as `p/q`.
    pub alpha: String,
    pub delta: usize,
    pub n: usize,
    pub s: usize,
    /// Exact `f(n − δ)` as `p/q`.
    pub value: String,
    pub value_f64: f64,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct SubcaseScan {
    pub checked: usize,
    pub violations: Vec<SubcaseViolation>,
}

/// Exact check of `f(n − δ) > 0` for every α in `alphas`, δ in `deltas`,
/// even `n` in `[min_order, min_order + margin_n]` and `s` in
/// `[δ+1, ⌊n/2⌋]`.
pub fn subcase_positivity_scan(
    alphas: &[BigRational],
    deltas: RangeInclusive<usize>,
    margin_n: usize,
) -> Result<SubcaseScan> {
    let mut scan = SubcaseScan::default();
    for a in alphas {
        check_unit_interval(a)?;
        for delta in deltas.clone() {
            let lo = min_order_exact(a, delta)?;
            let hi = floor_to_usize(&(lo.clone() + BigRational::from_integer(margin_n.into())));
            let first = ceil_to_usize(&lo).next_multiple_of(2);
            for n in (first..=hi).step_by(2) {
                let x = BigRational::from_integer((n - delta).into());
                for s in delta + 1..=n / 2 {
                    let value = f_case1_exact(n, delta, s, a, &x);
                    scan.checked += 1;
                    if !value.is_positive() {
                        scan.violations.push(SubcaseViolation {
                            alpha: a.to_string(),
                            delta,
                            n,
                            s,
                            value_f64: to_f64(&value),
                            value: value.to_string(),
                        });
                    }
                }
            }
        }
    }
    Ok(scan)
}

/// `G₃ = K_s ∨ (K_m ∪ (s−1)K_{δ+1−s})` and the graph `G₄` obtained by the
/// edge exchange.
///
/// Layout: `S = 0..s`, big clique `w_r = s + r − 1` (`1 ≤ r ≤ m`), small
/// cliques `v_{i,j} = s + m + (i−1)q + (j−1)` with `q = δ + 1 − s`.
/// Removed: all edges of the first small clique and the stars
/// `v_{i,1}v_{i,j}` of cliques `2..s−1`. Added: every small-clique vertex to
/// `w_1..w_{δ−s}`, and `v_{i,j}` (`i, j ≥ 2`) to `w_{δ−s+1}..w_m`.
#[derive(Debug, Clone)]
pub struct Case3Surgery {
    pub g3: Graph,
    pub g4: Graph,
    pub m_inner: usize,
    pub removed: Vec<Edge>,
    pub added: Vec<Edge>,
    /// `(2s−3)·C(q,2) + (m−δ+s−1)(s−2)(δ−s)`.
    pub edge_delta: i64,
}

impl Case3Surgery {
    /// `|added| − |removed|` as constructed.
    pub fn constructed_delta(&self) -> i64 {
        self.added.len() as i64 - self.removed.len() as i64
    }
}

pub fn case3_surgery(n: usize, delta: usize, s: usize) -> Result<Case3Surgery> {
    if s < 2 || s + 1 > delta || n % 2 == 1 {
        return Err(Error::Precondition(format!(
            "need 2 ≤ s ≤ δ−1 and n even, got n = {n}, δ = {delta}, s = {s}"
        )));
    }
    let q = delta + 1 - s;
    let m = n
        .checked_sub(s + q * (s - 1))
        .filter(|&m| m >= q)
        .ok_or_else(|| Error::Precondition(format!("n = {n} too small for δ = {delta}, s = {s}")))?;
    let mut parts = vec![m];
    parts.extend(std::iter::repeat(q).take(s - 1));
    let g3 = build_join_union(&JoinUnionSpec::new(s, parts)?);

    let w = |r: usize| s + r - 1;
    let v = |i: usize, j: usize| s + m + (i - 1) * q + (j - 1);
    let mut removed = Vec::new();
    for j1 in 1..=q {
        for j2 in j1 + 1..=q {
            removed.push(edge(v(1, j1), v(1, j2)));
        }
    }
    for i in 2..s {
        for j in 2..=q {
            removed.push(edge(v(i, 1), v(i, j)));
        }
    }
    let mut added = Vec::new();
    for i in 1..s {
        for j in 1..=q {
            for r in 1..=delta - s {
                added.push(edge(v(i, j), w(r)));
            }
        }
    }
    for i in 2..s {
        for j in 2..=q {
            for r in delta - s + 1..=m {
                added.push(edge(v(i, j), w(r)));
            }
        }
    }

    let mut g4 = g3.clone();
    for &(a, b) in &removed {
        if !g4.has_edge(a, b) {
            return Err(Error::PropertyViolation(format!("removed edge ({a}, {b}) absent from G3")));
        }
        g4.remove_edge(a, b);
    }
    for &(a, b) in &added {
        if g4.has_edge(a, b) {
            return Err(Error::PropertyViolation(format!("added edge ({a}, {b}) already present")));
        }
        g4.add_edge(a, b);
    }
    let (si, di, mi, qi) = (s as i64, delta as i64, m as i64, q as i64);
    let edge_delta = (2 * si - 3) * (qi * (qi - 1) / 2) + (mi - di + si - 1) * (si - 2) * (di - si);
    Ok(Case3Surgery {
        g3,
        g4,
        m_inner: m,
        removed,
        added,
        edge_delta,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Case3Gap {
    pub rho_g3: f64,
    pub rho_g4: f64,
    /// `ρ_α(G₄) − ρ_α(G₃)`.
    pub gap: f64,
    /// `xᵀ(A_α(G₄) − A_α(G₃))x` at the Perron vector `x` of `G₃`.
    pub quadratic_delta: f64,
}

pub fn case3_radius_gap(n: usize, delta: usize, s: usize, a: Alpha) -> Result<Case3Gap> {
    if a.value() >= 1.0 {
        return Err(Error::AlphaOutOfRange(a.value()));
    }
    let surgery = case3_surgery(n, delta, s)?;
    let p3 = perron_pair(&surgery.g3, a, RADIUS_TOL)?;
    let rho_g4 = perron_pair(&surgery.g4, a, RADIUS_TOL)?.radius;
    let quadratic_delta = quadratic_form_delta(&surgery.g4, &surgery.g3, &p3.perron, a)?;
    Ok(Case3Gap {
        rho_g3: p3.radius,
        rho_g4,
        gap: rho_g4 - p3.radius,
        quadratic_delta,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MergeComparison {
    /// `ρ_α` of the input join-union.
    pub original: f64,
    /// `ρ_α(K_s ∨ (K_{n−s−p(t−1)} ∪ (t−1)K_p))`.
    pub merged: f64,
    pub merged_parts: Vec<usize>,
    /// The input already has the merged shape.
    pub canonical: bool,
}

/// Compares a join-union with the graph obtained by shrinking every part but
/// the first to `p` and moving the freed vertices into the first part.
pub fn merge_bound_check(spec: &JoinUnionSpec, p: usize, a: Alpha) -> Result<MergeComparison> {
    if p == 0 || spec.parts().iter().any(|&part| part < p) {
        return Err(Error::Precondition(format!(
            "need 1 ≤ p ≤ every part, got p = {p}, parts {:?}",
            spec.parts()
        )));
    }
    let t = spec.parts().len();
    let mut merged_parts = vec![spec.order() - spec.join_size() - p * (t - 1)];
    merged_parts.extend(std::iter::repeat(p).take(t - 1));
    let merged_spec = JoinUnionSpec::new(spec.join_size(), merged_parts.clone())?;
    let original = perron_pair(&build_join_union(spec), a, RADIUS_TOL)?.radius;
    let merged = perron_pair(&build_join_union(&merged_spec), a, RADIUS_TOL)?.radius;
    Ok(MergeComparison {
        original,
        merged,
        canonical: spec.parts() == merged_parts.as_slice(),
        merged_parts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quotient::charpoly_join;
    use crate::theorem::parse_rational;
    use proptest::prelude::*;

    fn alpha(v: f64) -> Alpha {
        Alpha::new(v).unwrap()
    }

    #[test]
    fn f_is_the_scaled_difference() {
        for &(n, d, s) in &[(14usize, 3usize, 5usize), (20, 4, 7), (16, 2, 8), (30, 5, 6)] {
            for al in [0.0, 0.3, 0.5, 0.6, 0.8] {
                let a = alpha(al);
                let b2 = charpoly_join(n, s, a).unwrap();
                let bs = charpoly_join(n, d, a).unwrap();
                for x in [0.0, 1.5, (n - d) as f64, n as f64, 2.0 * n as f64] {
                    let lhs = b2.eval(x) - bs.eval(x);
                    let rhs = (s as f64 - d as f64) * f_case1(n, d, s, a, x);
                    assert!((lhs - rhs).abs() <= 1e-9 * lhs.abs().max(1.0), "{n} {d} {s} {al} {x}");
                }
            }
        }
    }

    #[test]
    fn f_spot_value() {
        // α = 0: f(x) = x² + (2 − s − δ)x + sn + δn − n − 2s² − 2sδ + 2s − 2δ² + 2δ
        // (14, 3, 4) at x = 11: 121 − 55 + 56 + 42 − 14 − 32 − 24 + 8 − 18 + 6 = 90
        assert_eq!(f_case1(14, 3, 4, alpha(0.0), 11.0), 90.0);
        let exact = f_case1_exact(14, 3, 4, &parse_rational("0").unwrap(), &parse_rational("11").unwrap());
        assert_eq!(exact, parse_rational("90").unwrap());
    }

    #[test]
    fn f_exact_agrees_with_float() {
        let a = parse_rational("3/10").unwrap();
        let x = parse_rational("23/2").unwrap();
        let e = to_f64(&f_case1_exact(20, 3, 6, &a, &x));
        assert!((e - f_case1(20, 3, 6, alpha(0.3), 11.5)).abs() < 1e-9);
    }

    #[test]
    fn scan_low_alpha_is_clean() {
        let alphas: Vec<_> = ["0", "1/4", "1/2"].iter().map(|s| parse_rational(s).unwrap()).collect();
        let scan = subcase_positivity_scan(&alphas, 2..=6, 10).unwrap();
        assert!(scan.checked > 0);
        assert!(scan.violations.is_empty(), "{:?}", scan.violations);
    }

    #[test]
    fn scan_boundary_two_thirds_touches_zero() {
        // at α = 2/3, n = 8δ − 8, s = n/2 the value is exactly 0
        let scan = subcase_positivity_scan(&[parse_rational("2/3").unwrap()], 2..=4, 0).unwrap();
        assert_eq!(scan.violations.len(), 3);
        for v in &scan.violations {
            assert_eq!((v.n, v.s, v.value.as_str()), (8 * v.delta - 8, 4 * v.delta - 4, "0"));
        }
    }

    #[test]
    fn scan_rejects_alpha_one() {
        assert!(subcase_positivity_scan(&[parse_rational("1").unwrap()], 2..=3, 2).is_err());
    }

    #[test]
    fn surgery_small_case() {
        let c = case3_surgery(10, 3, 2).unwrap();
        assert_eq!(c.m_inner, 6);
        assert_eq!((c.removed.len(), c.added.len(), c.edge_delta), (1, 2, 1));
        assert_eq!(c.g4.size() as i64 - c.g3.size() as i64, 1);
        assert!(case3_surgery(10, 3, 3).is_err());
        assert!(case3_surgery(9, 3, 2).is_err());
        assert!(case3_surgery(6, 5, 2).is_err());
    }

    #[test]
    fn surgery_gap_examples() {
        for (n, d, s, al) in [(10, 3, 2, 0.0), (14, 4, 2, 0.5), (16, 5, 3, 0.75)] {
            let gap = case3_radius_gap(n, d, s, alpha(al)).unwrap();
            assert!(gap.gap > 0.0, "{n} {d} {s}");
            assert!(gap.quadratic_delta > 0.0, "{n} {d} {s}");
        }
    }

    #[test]
    fn merge_examples() {
        let a = alpha(0.3);
        let spec = JoinUnionSpec::new(2, vec![3, 3, 3]).unwrap();
        let c = merge_bound_check(&spec, 1, a).unwrap();
        assert_eq!(c.merged_parts, vec![7, 1, 1]);
        assert!(c.original < c.merged - 1e-6);
        let c = merge_bound_check(&spec, 3, a).unwrap();
        assert!(c.canonical);
        assert_eq!(c.original, c.merged);
        let c = merge_bound_check(&JoinUnionSpec::new(3, vec![5, 3]).unwrap(), 1, a).unwrap();
        assert!(!c.canonical && c.original < c.merged);
        assert!(merge_bound_check(&spec, 4, a).is_err());
        assert!(merge_bound_check(&spec, 0, a).is_err());
    }

    proptest! {
        #[test]
        fn surgery_counts_match(delta in 3usize..=7, s_off in 0usize..5, extra in 0usize..8) {
            let s = 2 + s_off % (delta - 2);
            let q = delta + 1 - s;
            let base = s + q * s;
            let n = (base + extra).next_multiple_of(2);
            let c = case3_surgery(n, delta, s).unwrap();
            prop_assert_eq!(c.edge_delta, c.constructed_delta());
            prop_assert!(c.edge_delta >= 1);
            if s == 2 {
                let e1 = (s - 1) * q * (delta - s);
                prop_assert_eq!(c.added.len(), e1);
            }
        }

        #[test]
        fn merge_never_decreases(s in 0usize..4, raw in proptest::collection::vec(1usize..6, 1..5), al in 0.0f64..0.95) {
            let spec = JoinUnionSpec::new(s, raw).unwrap();
            prop_assume!(spec.order() >= 2);
            let p = *spec.parts().last().unwrap();
            for p in [1, p] {
                let c = merge_bound_check(&spec, p, alpha(al)).unwrap();
                prop_assert!(c.original <= c.merged + 1e-9);
            }
        }
    }
}
