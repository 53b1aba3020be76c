//! The Tutte polynomial and the `β` invariants, computed four ways, and
//! the four-variable expansion over subsets and over orientations.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use crate::activity::{all_tree_activities, orientation_activities, subset_activities};
use crate::error::{Error, Result};
use crate::filtration::{beta_product, enumerate_connected_filtrations};
use crate::graph::OrderedGraph;
use crate::orientation::Digraph;

/// A polynomial `Σ t_{i,j} x^i y^j` with nonnegative integer coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct TuttePoly {
    coeffs: BTreeMap<(usize, usize), u64>,
}

impl TuttePoly {
    pub fn zero() -> TuttePoly {
        TuttePoly::default()
    }

    pub fn one() -> TuttePoly {
        TuttePoly::monomial(0, 0, 1)
    }

    pub fn monomial(i: usize, j: usize, c: u64) -> TuttePoly {
        let mut p = TuttePoly::zero();
        p.add_term(i, j, c);
        p
    }

    /// Builds a polynomial from `((i, j), t_{i,j})` pairs.
    pub fn from_terms(terms: impl IntoIterator<Item = ((usize, usize), u64)>) -> TuttePoly {
        let mut p = TuttePoly::zero();
        for ((i, j), c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    pub fn add_term(&mut self, i: usize, j: usize, c: u64) {
        if c != 0 {
            *self.coeffs.entry((i, j)).or_insert(0) += c;
        }
    }

    /// `t_{i,j}`.
    pub fn coeff(&self, i: usize, j: usize) -> u64 {
        self.coeffs.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero coefficients keyed by `(i, j)`.
    pub fn coeffs(&self) -> &BTreeMap<(usize, usize), u64> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Value at an integer point.
    pub fn eval(&self, x: i128, y: i128) -> i128 {
        self.coeffs
            .iter()
            .map(|(&(i, j), &c)| c as i128 * x.pow(i as u32) * y.pow(j as u32))
            .sum()
    }

    /// Terms with no `y`: the polynomial `t(x, 0)`.
    pub fn at_y_zero(&self) -> TuttePoly {
        TuttePoly::from_terms(self.coeffs.iter().filter(|((_, j), _)| *j == 0).map(|(k, c)| (*k, *c)))
    }

    /// Terms with no `x`: the polynomial `t(0, y)`.
    pub fn at_x_zero(&self) -> TuttePoly {
        TuttePoly::from_terms(self.coeffs.iter().filter(|((i, _), _)| *i == 0).map(|(k, c)| (*k, *c)))
    }
}

impl Add for &TuttePoly {
    type Output = TuttePoly;
    fn add(self, rhs: &TuttePoly) -> TuttePoly {
        let mut out = self.clone();
        for (&(i, j), &c) in &rhs.coeffs {
            out.add_term(i, j, c);
        }
        out
    }
}

impl Mul for &TuttePoly {
    type Output = TuttePoly;
    fn mul(self, rhs: &TuttePoly) -> TuttePoly {
        let mut out = TuttePoly::zero();
        for (&(i, j), &c) in &self.coeffs {
            for (&(k, l), &d) in &rhs.coeffs {
                out.add_term(i + k, j + l, c * d);
            }
        }
        out
    }
}

/// Terms by increasing power of `y`, then decreasing power of `x`:
/// `x^3+3x^2+2x+4xy+2y+3y^2+y^3`.
impl fmt::Display for TuttePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut terms: Vec<_> = self.coeffs.iter().collect();
        terms.sort_by(|((i1, j1), _), ((i2, j2), _)| j1.cmp(j2).then(i2.cmp(i1)));
        for (n, (&(i, j), &c)) in terms.into_iter().enumerate() {
            if n > 0 {
                f.write_str("+")?;
            }
            if c != 1 || (i == 0 && j == 0) {
                write!(f, "{c}")?;
            }
            for (var, pow) in [("x", i), ("y", j)] {
                match pow {
                    0 => {}
                    1 => f.write_str(var)?,
                    p => write!(f, "{var}^{p}")?,
                }
            }
        }
        Ok(())
    }
}

/// Counts of subsets or orientations by four activity sizes
/// `(i, p, e, q)`, standing for the monomial `x^i u^p y^e v^q`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct FourVarTable {
    pub counts: BTreeMap<(usize, usize, usize, usize), u64>,
}

impl FourVarTable {
    fn bump(&mut self, key: (usize, usize, usize, usize), c: u64) {
        if c != 0 {
            *self.counts.entry(key).or_insert(0) += c;
        }
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Sets `u = x` and `v = y`.
    pub fn collapse(&self) -> TuttePoly {
        TuttePoly::from_terms(self.counts.iter().map(|(&(i, p, e, q), &c)| ((i + p, e + q), c)))
    }
}

impl fmt::Display for FourVarTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (&(i, p, e, q), &c) in &self.counts {
            writeln!(f, "x^{i} u^{p} y^{e} v^{q}: {c}")?;
        }
        Ok(())
    }
}

fn binomial(n: usize, k: usize) -> u64 {
    (0..k).fold(1u64, |acc, m| acc * (n - m) as u64 / (m as u64 + 1))
}

/// `T(x+u, y+v)` expanded into monomials.
pub fn expand_four_var(t: &TuttePoly) -> FourVarTable {
    let mut out = FourVarTable::default();
    for (&(i, j), &c) in t.coeffs() {
        for p in 0..=i {
            for q in 0..=j {
                out.bump((i - p, p, j - q, q), c * binomial(i, p) * binomial(j, q));
            }
        }
    }
    out
}

/// Tutte's expansion `Σ_T x^{|Int(T)|} y^{|Ext(T)|}` over maximal
/// spanning forests. Cached per minor.
pub fn tutte_by_trees(g: &OrderedGraph) -> Result<TuttePoly> {
    let data = g.data();
    if let Some(t) = data.tutte.get() {
        return Ok(t.clone());
    }
    let mut p = TuttePoly::zero();
    for (_, int, ext) in all_tree_activities(g)? {
        p.add_term(int.len(), ext.len(), 1);
    }
    Ok(data.tutte.get_or_init(|| p).clone())
}

/// Counts `o_{i,j}` of orientations with `|O*| = i` and `|O| = j`, each
/// divided by `2^{i+j}`.
pub fn tutte_by_orientations(g: &OrderedGraph) -> Result<TuttePoly> {
    g.check_orientations("orientation enumeration")?;
    let reference = Digraph::new(g.clone());
    let mut counts: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    for a in g.edges().subsets() {
        let acts = reference.reoriented(a).activity_sets()?;
        *counts
            .entry((acts.dual_active.len(), acts.active.len()))
            .or_insert(0) += 1;
    }
    let mut p = TuttePoly::zero();
    for ((i, j), o) in counts {
        let d = 1u64 << (i + j);
        if o % d != 0 {
            return Err(Error::Invariant(format!(
                "o_{{{i},{j}}} = {o} is not divisible by {d}"
            )));
        }
        p.add_term(i, j, o / d);
    }
    Ok(p)
}

/// Sum over connected filtrations of the product of `β` over acyclic layer
/// minors and `β*` over cyclic layer minors, times `x^ι y^ε`.
pub fn tutte_by_filtrations(g: &OrderedGraph) -> Result<TuttePoly> {
    let mut p = TuttePoly::zero();
    for f in enumerate_connected_filtrations(g)? {
        p.add_term(f.iota(), f.epsilon(), beta_product(g, &f)?);
    }
    Ok(p)
}

/// `Σ_{F_c} t(G/F_c; x, 0) · t(G(F_c); 0, y)` over cyclic flats `F_c`.
pub fn convolution(g: &OrderedGraph) -> Result<TuttePoly> {
    g.check_orientations("cyclic flat enumeration")?;
    let mut p = TuttePoly::zero();
    for fc in g.edges().subsets() {
        if !g.is_cyclic_flat(fc)? {
            continue;
        }
        p = &p + &convolution_term(g, fc)?;
    }
    Ok(p)
}

/// `t(G/F; x, 0) · t(G(F); 0, y)`, which vanishes unless `F` is a cyclic flat.
pub fn convolution_term(g: &OrderedGraph, f: crate::graph::EdgeSet) -> Result<TuttePoly> {
    let outer = tutte_by_trees(&g.contract(f)?)?.at_y_zero();
    let inner = tutte_by_trees(&g.restrict(f)?)?.at_x_zero();
    Ok(&outer * &inner)
}

/// `β(G) = t_{1,0}`.
pub fn beta(g: &OrderedGraph) -> Result<u64> {
    Ok(tutte_by_trees(g)?.coeff(1, 0))
}

/// `β*(G) = t_{0,1}`.
pub fn beta_star(g: &OrderedGraph) -> Result<u64> {
    Ok(tutte_by_trees(g)?.coeff(0, 1))
}

/// Counts `(|Int(A)|, |P(A)|, |Ext(A)|, |Q(A)|)` over all subsets `A`.
pub fn four_var_by_subsets(g: &OrderedGraph) -> Result<FourVarTable> {
    g.check_orientations("subset enumeration")?;
    let mut out = FourVarTable::default();
    for a in g.edges().subsets() {
        let s = subset_activities(g, a)?;
        out.bump((s.int_.len(), s.p.len(), s.ext.len(), s.q.len()), 1);
    }
    Ok(out)
}

/// Counts `(|Θ*|, |Θ̄*|, |Θ|, |Θ̄|)` over all reorientations of `reference`.
pub fn four_var_by_orientations(reference: &Digraph) -> Result<FourVarTable> {
    reference.graph().check_orientations("orientation enumeration")?;
    let mut out = FourVarTable::default();
    for a in reference.edges().subsets() {
        let o = orientation_activities(reference, a)?;
        out.bump(
            (
                o.theta_star.len(),
                o.theta_star_bar.len(),
                o.theta.len(),
                o.theta_bar.len(),
            ),
            1,
        );
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> OrderedGraph {
        OrderedGraph::new(3, &[(0, 1), (0, 2), (1, 2)]).unwrap()
    }

    fn k4() -> OrderedGraph {
        OrderedGraph::new(4, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]).unwrap()
    }

    fn all_four(g: &OrderedGraph) -> Vec<TuttePoly> {
        vec![
            tutte_by_trees(g).unwrap(),
            tutte_by_orientations(g).unwrap(),
            tutte_by_filtrations(g).unwrap(),
            convolution(g).unwrap(),
        ]
    }

    #[test]
    fn display() {
        assert_eq!(TuttePoly::zero().to_string(), "0");
        assert_eq!(TuttePoly::one().to_string(), "1");
        let p = TuttePoly::from_terms([((2, 0), 1), ((1, 0), 1), ((0, 1), 1)]);
        assert_eq!(p.to_string(), "x^2+x+y");
    }

    #[test]
    fn triangle_four_ways() {
        for p in all_four(&k3()) {
            assert_eq!(p.to_string(), "x^2+x+y");
        }
    }

    #[test]
    fn k4_four_ways() {
        for p in all_four(&k4()) {
            assert_eq!(p.to_string(), "x^3+3x^2+2x+4xy+2y+3y^2+y^3");
        }
        assert_eq!(beta(&k4()).unwrap(), 2);
        assert_eq!(tutte_by_trees(&k4()).unwrap().eval(1, 1), 16);
    }

    #[test]
    fn single_edges() {
        let lp = OrderedGraph::new(1, &[(0, 0)]).unwrap();
        let bar = OrderedGraph::new(2, &[(0, 1)]).unwrap();
        for p in all_four(&lp) {
            assert_eq!(p.to_string(), "y");
        }
        for p in all_four(&bar) {
            assert_eq!(p.to_string(), "x");
        }
        assert_eq!((beta(&bar).unwrap(), beta_star(&bar).unwrap()), (1, 0));
        assert_eq!((beta(&lp).unwrap(), beta_star(&lp).unwrap()), (0, 1));
    }

    #[test]
    fn four_variable_triangle() {
        let g = k3();
        let by_subsets = four_var_by_subsets(&g).unwrap();
        let expanded = expand_four_var(&tutte_by_trees(&g).unwrap());
        assert_eq!(by_subsets, expanded);
        assert_eq!(by_subsets.total(), 8);
        assert_eq!(by_subsets.counts[&(1, 1, 0, 0)], 2);
        assert_eq!(four_var_by_orientations(&Digraph::new(g)).unwrap(), expanded);
    }

    #[test]
    fn non_flat_terms_vanish() {
        let g = k4();
        let mut sum = TuttePoly::zero();
        for f in g.edges().subsets() {
            let term = convolution_term(&g, f).unwrap();
            if !g.is_cyclic_flat(f).unwrap() {
                assert!(term.is_zero(), "{f:?}");
            }
            sum = &sum + &term;
        }
        assert_eq!(sum, tutte_by_trees(&g).unwrap());
    }
}
