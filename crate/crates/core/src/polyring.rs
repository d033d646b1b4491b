//! Homogeneous polynomials in n+1 variables over Q(i).
//!
//! Monomials are kept in a fixed global order: graded, then lexicographic
//! with `x_0 > x_1 > ... > x_n` (so `x_0^k` is the first monomial of degree
//! k). Every matrix layout downstream inherits this order, which is what
//! makes reports byte-identical across runs.
//!
//! Polynomial storage is sparse: the inputs here have a handful of terms
//! while the ambient monomial bases grow into the thousands.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::exactnum::{GaussRat, NumError};
use crate::linalg::{self, ExactMat};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error(transparent)]
    Num(#[from] NumError),
    #[error("variable index {index} out of range for {n_vars} variables")]
    VarIndex { index: usize, n_vars: usize },
    #[error("expected {expected} exponents, got {got}")]
    ExpLength { expected: usize, got: usize },
    #[error("term {term} has degree {got}, polynomial has degree {expected}")]
    DegreeMismatch {
        term: String,
        got: u32,
        expected: u32,
    },
    #[error("projective point must have a nonzero coordinate")]
    ZeroPoint,
    #[error("point is not a critical point: partial {index} is nonzero there")]
    NotCritical { index: usize },
    #[error("dimension mismatch: point has {point} coordinates, polynomial {poly}")]
    PointDim { point: usize, poly: usize },
}

/// Exponent vector of a monomial `x^nu = prod x_j^{nu_j}`, degree cached.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExpVec {
    exps: Vec<u32>,
    degree: u32,
}

impl ExpVec {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        ExpVec { exps, degree }
    }

    pub fn zero(n_vars: usize) -> Self {
        ExpVec {
            exps: vec![0; n_vars],
            degree: 0,
        }
    }

    /// x_j as an exponent vector.
    pub fn var(n_vars: usize, j: usize) -> Self {
        let mut exps = vec![0; n_vars];
        exps[j] = 1;
        ExpVec { exps, degree: 1 }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn n_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn get(&self, j: usize) -> u32 {
        self.exps[j]
    }

    pub fn mul(&self, other: &ExpVec) -> ExpVec {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a + b)
            .collect();
        ExpVec {
            exps,
            degree: self.degree + other.degree,
        }
    }

    /// Componentwise difference, or None if any component would go negative.
    pub fn checked_sub(&self, other: &ExpVec) -> Option<ExpVec> {
        if self
            .exps
            .iter()
            .zip(&other.exps)
            .any(|(a, b)| a < b)
        {
            return None;
        }
        let exps: Vec<u32> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a - b)
            .collect();
        Some(ExpVec::new(exps))
    }
}

// Global monomial order: by degree, then lexicographically *descending*
// exponents, so that iteration and basis enumeration agree.
impl Ord for ExpVec {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for ExpVec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ExpVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps)
    }
}

/// All exponent vectors of the given degree, each exactly once, in the
/// global monomial order. Length is binom(k + n_vars - 1, n_vars - 1).
pub fn monomial_basis(n_vars: usize, k: u32) -> Vec<ExpVec> {
    assert!(n_vars >= 1, "need at least one variable");
    let mut out = Vec::with_capacity(basis_size(n_vars, k));
    let mut current = vec![0u32; n_vars];
    emit(&mut out, &mut current, 0, k);
    out
}

fn emit(out: &mut Vec<ExpVec>, current: &mut Vec<u32>, pos: usize, remaining: u32) {
    if pos + 1 == current.len() {
        current[pos] = remaining;
        out.push(ExpVec::new(current.clone()));
        return;
    }
    for e in (0..=remaining).rev() {
        current[pos] = e;
        emit(out, current, pos + 1, remaining - e);
    }
    current[pos] = 0;
}

/// binom(k + n_vars - 1, n_vars - 1) without overflow for the sizes in scope.
pub fn basis_size(n_vars: usize, k: u32) -> usize {
    binomial(k as u64 + n_vars as u64 - 1, n_vars as u64 - 1) as usize
}

/// Exact binomial coefficient in u128 arithmetic.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for j in 0..k {
        acc = acc * (n - j) as u128 / (j + 1) as u128;
    }
    acc
}

/// Projective point with coordinates in Q(i), normalized so that its first
/// nonzero coordinate (the pivot) equals 1.
#[derive(Clone, PartialEq, Eq)]
pub struct ProjPoint {
    coords: Vec<GaussRat>,
    pivot: usize,
}

impl ProjPoint {
    pub fn new(raw: Vec<GaussRat>) -> Result<Self, PolyError> {
        let pivot = raw
            .iter()
            .position(|c| !c.is_zero())
            .ok_or(PolyError::ZeroPoint)?;
        let inv = raw[pivot].invert()?;
        let coords = raw.iter().map(|c| c * &inv).collect();
        Ok(ProjPoint { coords, pivot })
    }

    pub fn from_ints(raw: &[i64]) -> Result<Self, PolyError> {
        ProjPoint::new(raw.iter().map(|&c| GaussRat::from_int(c)).collect())
    }

    pub fn coords(&self) -> &[GaussRat] {
        &self.coords
    }

    pub fn pivot(&self) -> usize {
        self.pivot
    }

    pub fn n_vars(&self) -> usize {
        self.coords.len()
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (j, c) in self.coords.iter().enumerate() {
            if j > 0 {
                write!(f, ":")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Homogeneous polynomial of a fixed degree, sparse over the monomial basis.
///
/// Invariants: every stored exponent vector has the polynomial's degree and
/// length `n_vars`; no zero coefficient is stored. The zero polynomial of
/// any degree has an empty term map.
#[derive(Clone, PartialEq, Eq)]
pub struct HomoPoly {
    n_vars: usize,
    degree: u32,
    terms: BTreeMap<ExpVec, GaussRat>,
}

impl HomoPoly {
    pub fn zero(n_vars: usize, degree: u32) -> Self {
        HomoPoly {
            n_vars,
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(n_vars: usize, exp: ExpVec, coeff: GaussRat) -> Result<Self, PolyError> {
        let mut p = HomoPoly::zero(n_vars, exp.degree());
        p.add_term(exp, coeff)?;
        Ok(p)
    }

    /// x_j, as a degree-1 polynomial.
    pub fn var(n_vars: usize, j: usize) -> Self {
        HomoPoly::monomial(n_vars, ExpVec::var(n_vars, j), GaussRat::one()).unwrap()
    }

    pub fn from_terms(
        n_vars: usize,
        degree: u32,
        terms: impl IntoIterator<Item = (ExpVec, GaussRat)>,
    ) -> Result<Self, PolyError> {
        let mut p = HomoPoly::zero(n_vars, degree);
        for (exp, coeff) in terms {
            p.add_term(exp, coeff)?;
        }
        Ok(p)
    }

    pub fn add_term(&mut self, exp: ExpVec, coeff: GaussRat) -> Result<(), PolyError> {
        if exp.n_vars() != self.n_vars {
            return Err(PolyError::ExpLength {
                expected: self.n_vars,
                got: exp.n_vars(),
            });
        }
        if exp.degree() != self.degree {
            return Err(PolyError::DegreeMismatch {
                term: format!("{exp:?}"),
                got: exp.degree(),
                expected: self.degree,
            });
        }
        if coeff.is_zero() {
            return Ok(());
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExpVec, &GaussRat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add(&self, other: &HomoPoly) -> HomoPoly {
        assert_eq!(self.degree, other.degree, "degrees must match");
        assert_eq!(self.n_vars, other.n_vars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone()).unwrap();
        }
        out
    }

    pub fn sub(&self, other: &HomoPoly) -> HomoPoly {
        self.add(&other.scale(&GaussRat::from_int(-1)))
    }

    pub fn scale(&self, c: &GaussRat) -> HomoPoly {
        if c.is_zero() {
            return HomoPoly::zero(self.n_vars, self.degree);
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, a)| (e.clone(), a * c))
            .collect();
        HomoPoly {
            n_vars: self.n_vars,
            degree: self.degree,
            terms,
        }
    }

    /// Product; degrees add.
    pub fn mul(&self, other: &HomoPoly) -> HomoPoly {
        assert_eq!(self.n_vars, other.n_vars);
        let mut out = HomoPoly::zero(self.n_vars, self.degree + other.degree);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea.mul(eb), ca * cb).unwrap();
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> HomoPoly {
        let mut out = HomoPoly::monomial(
            self.n_vars,
            ExpVec::zero(self.n_vars),
            GaussRat::one(),
        )
        .unwrap();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Partial derivative with respect to x_j. Degree drops by one;
    /// a degree-0 input gives the zero polynomial of degree 0.
    pub fn partial(&self, j: usize) -> HomoPoly {
        assert!(j < self.n_vars, "variable index out of range");
        let degree = self.degree.saturating_sub(1);
        let mut out = HomoPoly::zero(self.n_vars, degree);
        for (e, c) in &self.terms {
            let ej = e.get(j);
            if ej == 0 {
                continue;
            }
            let mut exps = e.exps().to_vec();
            exps[j] -= 1;
            let coeff = c * &GaussRat::from_int(ej as i64);
            out.add_term(ExpVec::new(exps), coeff).unwrap();
        }
        out
    }

    /// Iterated partial `prod_j d_j^{mu_j}`; order-independent.
    pub fn iterated_partial(&self, mu: &ExpVec) -> HomoPoly {
        assert_eq!(mu.n_vars(), self.n_vars);
        let mut out = self.clone();
        for j in 0..self.n_vars {
            for _ in 0..mu.get(j) {
                out = out.partial(j);
            }
        }
        out
    }

    /// Exact value at the normalized representative of `y`.
    pub fn evaluate(&self, y: &ProjPoint) -> Result<GaussRat, PolyError> {
        if y.n_vars() != self.n_vars {
            return Err(PolyError::PointDim {
                point: y.n_vars(),
                poly: self.n_vars,
            });
        }
        let mut acc = GaussRat::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            let mut vanished = false;
            for j in 0..self.n_vars {
                let exp = e.get(j);
                if exp == 0 {
                    continue;
                }
                let cj = &y.coords()[j];
                if cj.is_zero() {
                    vanished = true;
                    break;
                }
                for _ in 0..exp {
                    term = &term * cj;
                }
            }
            if !vanished {
                acc = &acc + &term;
            }
        }
        Ok(acc)
    }

    /// All n_vars first partials, in variable order.
    pub fn gradient(&self) -> Vec<HomoPoly> {
        (0..self.n_vars).map(|j| self.partial(j)).collect()
    }
}

impl fmt::Display for HomoPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let needs_parens = !c.im.is_zero() || !c.denom_is_one_display();
            if c.is_one() && e.degree() > 0 {
                // suppress the unit coefficient
            } else if needs_parens {
                write!(f, "({c})")?;
            } else {
                write!(f, "{c}")?;
            }
            let mut wrote_var = false;
            for j in 0..self.n_vars {
                let exp = e.get(j);
                if exp == 0 {
                    continue;
                }
                if wrote_var || !(c.is_one() && e.degree() > 0) {
                    write!(f, "*")?;
                }
                wrote_var = true;
                if exp == 1 {
                    write!(f, "x{j}")?;
                } else {
                    write!(f, "x{j}^{exp}")?;
                }
            }
        }
        Ok(())
    }
}

impl GaussRat {
    fn denom_is_one_display(&self) -> bool {
        use num_traits::One;
        self.re.denom().is_one() && self.im.denom().is_one()
    }
}

impl fmt::Debug for HomoPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Rank of the n x n Hessian of the dehomogenization of `f` in the affine
/// chart `coords[pivot] = 1`, evaluated at `y`. A node has rank exactly n.
///
/// `y` must be a critical point of `f` (all first partials vanish there);
/// otherwise the offending partial is reported.
pub fn hessian_rank_at(f: &HomoPoly, y: &ProjPoint) -> Result<usize, PolyError> {
    if y.n_vars() != f.n_vars() {
        return Err(PolyError::PointDim {
            point: y.n_vars(),
            poly: f.n_vars(),
        });
    }
    let grad = f.gradient();
    for (j, fj) in grad.iter().enumerate() {
        if !fj.evaluate(y)?.is_zero() {
            return Err(PolyError::NotCritical { index: j });
        }
    }
    // Dehomogenizing at the pivot is plain substitution, so the affine
    // Hessian entries are the mixed second partials in the other variables.
    let vars: Vec<usize> = (0..f.n_vars()).filter(|&j| j != y.pivot()).collect();
    let rows: Vec<Vec<GaussRat>> = vars
        .iter()
        .map(|&j| {
            vars.iter()
                .map(|&l| grad[j].partial(l).evaluate(y))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mat = ExactMat::from_rows(rows);
    Ok(linalg::rank(&mat))
}

// --- polynomial literal format -------------------------------------------
//
// {"n_vars": 4, "degree": 4, "terms": [{"coeff": "<gauss>", "exp": [e0,..]}]}

#[derive(Serialize, Deserialize)]
struct TermLit {
    coeff: GaussRat,
    exp: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct PolyLit {
    n_vars: usize,
    degree: u32,
    terms: Vec<TermLit>,
}

impl Serialize for HomoPoly {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let lit = PolyLit {
            n_vars: self.n_vars,
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermLit {
                    coeff: c.clone(),
                    exp: e.exps().to_vec(),
                })
                .collect(),
        };
        lit.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for HomoPoly {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let lit = PolyLit::deserialize(de)?;
        let mut p = HomoPoly::zero(lit.n_vars, lit.degree);
        for t in lit.terms {
            p.add_term(ExpVec::new(t.exp), t.coeff)
                .map_err(D::Error::custom)?;
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::GaussRat;

    fn mono(n_vars: usize, exps: &[u32]) -> HomoPoly {
        HomoPoly::monomial(n_vars, ExpVec::new(exps.to_vec()), GaussRat::one()).unwrap()
    }

    /// sum x_i^4 - sum_{i<j} x_i^2 x_j^2 in four variables.
    fn kummer_poly() -> HomoPoly {
        let mut f = HomoPoly::zero(4, 4);
        for i in 0..4 {
            let mut e = vec![0u32; 4];
            e[i] = 4;
            f.add_term(ExpVec::new(e), GaussRat::one()).unwrap();
        }
        for i in 0..4 {
            for j in (i + 1)..4 {
                let mut e = vec![0u32; 4];
                e[i] = 2;
                e[j] = 2;
                f.add_term(ExpVec::new(e), GaussRat::from_int(-1)).unwrap();
            }
        }
        f
    }

    #[test]
    fn basis_counts_and_order() {
        assert_eq!(monomial_basis(4, 8).len(), 165);
        assert_eq!(monomial_basis(4, 0), vec![ExpVec::zero(4)]);
        let b: Vec<Vec<u32>> = monomial_basis(2, 3)
            .iter()
            .map(|e| e.exps().to_vec())
            .collect();
        assert_eq!(b, vec![vec![3, 0], vec![2, 1], vec![1, 2], vec![0, 3]]);
        for k in 0..6 {
            assert_eq!(monomial_basis(4, k).len(), basis_size(4, k));
        }
    }

    #[test]
    fn partial_basics() {
        // d/dx0 of x0^2 x1 = 2 x0 x1
        let p = mono(2, &[2, 1]);
        let expect = mono(2, &[1, 1]).scale(&GaussRat::from_int(2));
        assert_eq!(p.partial(0), expect);
        // d/dx1 of x0^3 = 0
        assert!(mono(2, &[3, 0]).partial(1).is_zero());
    }

    #[test]
    fn kummer_gradient_matches_closed_form() {
        // f_j = 2 x_j (2 x_j^2 - sum_{i != j} x_i^2)
        let f = kummer_poly();
        for j in 0..4 {
            let mut expect = HomoPoly::zero(4, 3);
            let mut e = vec![0u32; 4];
            e[j] = 3;
            expect
                .add_term(ExpVec::new(e), GaussRat::from_int(4))
                .unwrap();
            for i in 0..4 {
                if i == j {
                    continue;
                }
                let mut e = vec![0u32; 4];
                e[j] = 1;
                e[i] = 2;
                expect
                    .add_term(ExpVec::new(e), GaussRat::from_int(-2))
                    .unwrap();
            }
            assert_eq!(f.partial(j), expect);
        }
    }

    #[test]
    fn iterated_partial_symmetric() {
        let f = kummer_poly();
        let mu = ExpVec::new(vec![1, 1, 0, 0]);
        // by hand: d0 d1 f = -4 x0 x1
        let expect = mono(4, &[1, 1, 0, 0]).scale(&GaussRat::from_int(-4));
        assert_eq!(f.iterated_partial(&mu), expect);
        // identity for mu = 0
        assert_eq!(f.iterated_partial(&ExpVec::zero(4)), f);
        // mu = (2,0) on x0^2 -> constant 2
        let p = mono(2, &[2, 0]);
        let d = p.iterated_partial(&ExpVec::new(vec![2, 0]));
        assert_eq!(
            d,
            HomoPoly::monomial(2, ExpVec::zero(2), GaussRat::from_int(2)).unwrap()
        );
        // order independence
        let a = f.partial(0).partial(1);
        let b = f.partial(1).partial(0);
        assert_eq!(a, b);
    }

    #[test]
    fn evaluation() {
        let f = kummer_poly();
        let y = ProjPoint::from_ints(&[0, 1, 1, 1]).unwrap();
        assert!(f.evaluate(&y).unwrap().is_zero());
        let x0 = HomoPoly::var(4, 0);
        let e0 = ProjPoint::from_ints(&[1, 0, 0, 0]).unwrap();
        assert_eq!(x0.evaluate(&e0).unwrap(), GaussRat::one());
    }

    #[test]
    fn sextic_example_point() {
        // f = (sum x_i^2)^3 - sum x_i^6 vanishes at (1, 0, i, i)
        let mut q = HomoPoly::zero(4, 2);
        for i in 0..4 {
            let mut e = vec![0u32; 4];
            e[i] = 2;
            q.add_term(ExpVec::new(e), GaussRat::one()).unwrap();
        }
        let mut f = q.pow(3);
        for i in 0..4 {
            let mut e = vec![0u32; 4];
            e[i] = 6;
            f.add_term(ExpVec::new(e), GaussRat::from_int(-1)).unwrap();
        }
        let y = ProjPoint::new(vec![
            GaussRat::one(),
            GaussRat::zero(),
            GaussRat::i(),
            GaussRat::i(),
        ])
        .unwrap();
        assert!(f.evaluate(&y).unwrap().is_zero());
    }

    #[test]
    fn mul_and_euler() {
        let x0 = HomoPoly::var(2, 0);
        let x1 = HomoPoly::var(2, 1);
        assert_eq!(x0.mul(&x1), mono(2, &[1, 1]));
        let zero = HomoPoly::zero(2, 5);
        assert!(x0.mul(&zero).is_zero());
        let s = x0.add(&x1);
        let sq = s.mul(&s);
        let mut expect = mono(2, &[2, 0]);
        expect
            .add_term(ExpVec::new(vec![1, 1]), GaussRat::from_int(2))
            .unwrap();
        expect
            .add_term(ExpVec::new(vec![0, 2]), GaussRat::one())
            .unwrap();
        assert_eq!(sq, expect);

        // Euler identity: sum x_j f_j = d f
        let f = kummer_poly();
        let mut acc = HomoPoly::zero(4, 4);
        for j in 0..4 {
            acc = acc.add(&HomoPoly::var(4, j).mul(&f.partial(j)));
        }
        assert_eq!(acc, f.scale(&GaussRat::from_int(4)));
    }

    #[test]
    fn hessian_ranks() {
        // sum_{i>=1} x_i^4/4 - x_0^2 sum x_i^2/2 has a rank-3 Hessian at e_0
        let mut f = HomoPoly::zero(4, 4);
        for i in 1..4 {
            let mut e = vec![0u32; 4];
            e[i] = 4;
            f.add_term(ExpVec::new(e), GaussRat::new(crate::BigRat::ratio(1, 4), crate::BigRat::zero()))
                .unwrap();
            let mut e = vec![0u32; 4];
            e[0] = 2;
            e[i] = 2;
            f.add_term(
                ExpVec::new(e),
                GaussRat::new(crate::BigRat::ratio(-1, 2), crate::BigRat::zero()),
            )
            .unwrap();
        }
        let e0 = ProjPoint::from_ints(&[1, 0, 0, 0]).unwrap();
        assert_eq!(hessian_rank_at(&f, &e0).unwrap(), 3);

        // cusp x_1^3 in two variables: zero Hessian at (1, 0)
        let cusp = mono(2, &[0, 3]);
        let y = ProjPoint::from_ints(&[1, 0]).unwrap();
        assert_eq!(hessian_rank_at(&cusp, &y).unwrap(), 0);

        // non-critical point is rejected
        let err = hessian_rank_at(&cusp, &ProjPoint::from_ints(&[1, 1]).unwrap());
        assert!(matches!(err, Err(PolyError::NotCritical { .. })));
    }

    #[test]
    fn literal_round_trip() {
        let f = kummer_poly();
        let json = serde_json::to_string(&f).unwrap();
        let back: HomoPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(f, back);
        // degree consistency enforced
        let bad = r#"{"n_vars":2,"degree":3,"terms":[{"coeff":"1","exp":[1,1]}]}"#;
        assert!(serde_json::from_str::<HomoPoly>(bad).is_err());
    }
}
