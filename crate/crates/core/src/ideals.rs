//! Graded pieces of the ideals attached to a nodal configuration.
//!
//! Everything is a finite-dimensional subspace of some `R_k`, presented in
//! the fixed monomial basis:
//!
//! * `J_k` — the degree-k piece of the Jacobian ideal of f,
//! * `I^(i)_k` — forms vanishing to order >= i at every node (symbolic
//!   power), computed as the kernel of a jet-evaluation matrix,
//! * `(I^i)_k` — the ordinary power, spanned by i-fold products of minimal
//!   generators of I,
//! * `(I^(i) J)_k` — the product piece `sum_j f_j * I^(i)_{k-d+1}`.

use std::collections::BTreeSet;

use crate::exactnum::GaussRat;
use crate::linalg::{self, ExactMat, LinAlgError, SparseVec, Subspace};
use crate::polyring::{basis_size, monomial_basis, ExpVec, HomoPoly, PolyError, ProjPoint};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IdealError {
    #[error(transparent)]
    Lin(#[from] LinAlgError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("nodes {first} and {second} coincide projectively")]
    DuplicateNode { first: usize, second: usize },
    #[error("node has {point} coordinates, ambient ring has {ring} variables")]
    NodeDim { point: usize, ring: usize },
}

/// Projectively distinct points in P^(n_vars - 1), the candidate singular
/// locus. The ambient variable count is stored explicitly so an empty set
/// (smooth hypersurface) still knows its ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeSet {
    n_vars: usize,
    points: Vec<ProjPoint>,
}

impl NodeSet {
    pub fn new(n_vars: usize, points: Vec<ProjPoint>) -> Result<Self, IdealError> {
        for p in &points {
            if p.n_vars() != n_vars {
                return Err(IdealError::NodeDim {
                    point: p.n_vars(),
                    ring: n_vars,
                });
            }
        }
        for a in 0..points.len() {
            for b in (a + 1)..points.len() {
                if points[a] == points[b] {
                    return Err(IdealError::DuplicateNode { first: a, second: b });
                }
            }
        }
        Ok(NodeSet { n_vars, points })
    }

    pub fn empty(n_vars: usize) -> Self {
        NodeSet {
            n_vars,
            points: Vec::new(),
        }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }
}

/// Which graded piece a subspace represents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PieceLabel {
    FullRing { k: u32 },
    Jacobian { k: u32 },
    SymbolicPower { i: i64, k: u32 },
    OrdinaryPower { i: i64, k: u32 },
    IdealTimesJacobian { i: i64, k: u32 },
}

impl std::fmt::Display for PieceLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PieceLabel::FullRing { k } => write!(f, "R_{k}"),
            PieceLabel::Jacobian { k } => write!(f, "J_{k}"),
            PieceLabel::SymbolicPower { i, k } => write!(f, "I^({i})_{k}"),
            PieceLabel::OrdinaryPower { i, k } => write!(f, "(I^{i})_{k}"),
            PieceLabel::IdealTimesJacobian { i, k } => write!(f, "(I^({i})J)_{k}"),
        }
    }
}

/// A subspace of the degree-k part `R_k`, tagged with what it represents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPiece {
    n_vars: usize,
    k: u32,
    space: Subspace,
    label: PieceLabel,
}

impl GradedPiece {
    fn new(n_vars: usize, k: u32, space: Subspace, label: PieceLabel) -> Self {
        debug_assert_eq!(space.ambient_dim(), basis_size(n_vars, k));
        GradedPiece {
            n_vars,
            k,
            space,
            label,
        }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn label(&self) -> &PieceLabel {
        &self.label
    }

    /// Canonical basis, converted back to polynomials.
    pub fn basis_polys(&self) -> Vec<HomoPoly> {
        let table = DegreeBasis::new(self.n_vars, self.k);
        self.space
            .basis_rows()
            .iter()
            .map(|row| table.poly_from_sparse(row))
            .collect()
    }
}

/// The monomial basis of `R_k` with index lookup.
pub struct DegreeBasis {
    n_vars: usize,
    k: u32,
    list: Vec<ExpVec>,
}

impl DegreeBasis {
    pub fn new(n_vars: usize, k: u32) -> Self {
        DegreeBasis {
            n_vars,
            k,
            list: monomial_basis(n_vars, k),
        }
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }

    pub fn exp(&self, idx: usize) -> &ExpVec {
        &self.list[idx]
    }

    pub fn index_of(&self, e: &ExpVec) -> usize {
        self.list
            .binary_search_by(|probe| probe.cmp(e))
            .expect("exponent vector of the right degree")
    }

    pub fn sparse_from_poly(&self, p: &HomoPoly) -> SparseVec {
        debug_assert_eq!(p.n_vars(), self.n_vars);
        debug_assert!(p.is_zero() || p.degree() == self.k);
        // term iteration follows the basis order, so indices come out sorted
        p.terms()
            .map(|(e, c)| (self.index_of(e) as u32, c.clone()))
            .collect()
    }

    pub fn poly_from_sparse(&self, row: &SparseVec) -> HomoPoly {
        let mut p = HomoPoly::zero(self.n_vars, self.k);
        for (idx, c) in row {
            p.add_term(self.list[*idx as usize].clone(), c.clone())
                .unwrap();
        }
        p
    }

    /// Row of `g * x^shift` in the basis one degree range up, given the row
    /// of `g` in this basis. Shifting preserves the monomial order, so the
    /// result stays sorted.
    fn shifted_row(&self, row: &SparseVec, shift: &ExpVec, target: &DegreeBasis) -> SparseVec {
        row.iter()
            .map(|(idx, c)| {
                let e = self.list[*idx as usize].mul(shift);
                (target.index_of(&e) as u32, c.clone())
            })
            .collect()
    }

    /// Row of `f * g` where `f` is given by terms and `g` by a row in this
    /// basis.
    fn product_row(&self, f: &HomoPoly, row: &SparseVec, target: &DegreeBasis) -> SparseVec {
        let mut acc: std::collections::BTreeMap<u32, GaussRat> = std::collections::BTreeMap::new();
        for (idx, cg) in row {
            let e = &self.list[*idx as usize];
            for (ef, cf) in f.terms() {
                let key = target.index_of(&ef.mul(e)) as u32;
                let add = cf * cg;
                match acc.entry(key) {
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(add);
                    }
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        let s = o.get() + &add;
                        if s.is_zero() {
                            o.remove();
                        } else {
                            *o.get_mut() = s;
                        }
                    }
                }
            }
        }
        acc.into_iter().collect()
    }
}

/// All of `R_k`.
pub fn full_piece(n_vars: usize, k: u32) -> GradedPiece {
    let n = basis_size(n_vars, k);
    GradedPiece::new(n_vars, k, Subspace::full(n), PieceLabel::FullRing { k })
}

/// `J_k = sum_j f_j R_{k-d+1}`, the degree-k piece of the Jacobian ideal.
pub fn jacobian_piece(f: &HomoPoly, k: u32) -> GradedPiece {
    let n_vars = f.n_vars();
    let d = f.degree();
    let ambient = basis_size(n_vars, k);
    if k + 1 < d {
        return GradedPiece::new(
            n_vars,
            k,
            Subspace::zero(ambient),
            PieceLabel::Jacobian { k },
        );
    }
    let t = k + 1 - d;
    let src = DegreeBasis::new(n_vars, t);
    let dst = DegreeBasis::new(n_vars, k);
    let grad = f.gradient();
    let mut rows: Vec<SparseVec> = Vec::with_capacity((n_vars) * src.len());
    for fj in &grad {
        if fj.is_zero() {
            continue;
        }
        let fj_row = DegreeBasis::new(n_vars, d - 1).sparse_from_poly(fj);
        let fj_basis = DegreeBasis::new(n_vars, d - 1);
        for idx in 0..src.len() {
            let shift = src.exp(idx);
            rows.push(fj_basis.shifted_row(&fj_row, shift, &dst));
        }
    }
    GradedPiece::new(
        n_vars,
        k,
        Subspace::span_sparse(rows, ambient),
        PieceLabel::Jacobian { k },
    )
}

/// The jet-evaluation matrix whose kernel is `I^(i)_k`: one row per
/// `(node y, multi-index mu)` with `|mu| = i - 1`, entries
/// `(d^mu x^nu)(y)` over the degree-k monomial basis. Size is
/// `(binom(i-1+n, n) * |nodes|, binom(k+n, n))`.
pub fn jet_matrix(nodes: &NodeSet, i: i64, k: u32) -> ExactMat {
    let n_vars = nodes.n_vars();
    let n_cols = basis_size(n_vars, k);
    if i <= 0 || nodes.is_empty() {
        return ExactMat::zeros(0, n_cols);
    }
    let order = (i - 1) as u32;
    let mus = monomial_basis(n_vars, order);
    let dst = DegreeBasis::new(n_vars, k);
    let mut rows: Vec<SparseVec> = Vec::with_capacity(mus.len() * nodes.len());
    for y in nodes.points() {
        // nonzero coordinates of y, with power tables up to degree k
        let nz: Vec<usize> = (0..n_vars).filter(|&j| !y.coords()[j].is_zero()).collect();
        let pow: Vec<Vec<GaussRat>> = (0..n_vars)
            .map(|j| {
                let mut t = vec![GaussRat::one()];
                if !y.coords()[j].is_zero() {
                    for e in 1..=k as usize {
                        t.push(&t[e - 1] * &y.coords()[j]);
                    }
                }
                t
            })
            .collect();
        if k < order {
            rows.extend(std::iter::repeat(Vec::new()).take(mus.len()));
            continue;
        }
        // nu = mu + rho with rho supported on the nonzero coordinates
        let rhos = monomial_basis(nz.len(), k - order);
        for mu in &mus {
            let mut row: SparseVec = Vec::with_capacity(rhos.len());
            for rho in &rhos {
                let mut nu = mu.exps().to_vec();
                for (slot, &j) in nz.iter().enumerate() {
                    nu[j] += rho.get(slot);
                }
                let nu = ExpVec::new(nu);
                // falling factorial prod_j nu_j (nu_j - 1) ... (nu_j - mu_j + 1)
                let mut coeff = GaussRat::one();
                for j in 0..n_vars {
                    for t in 0..mu.get(j) {
                        coeff = &coeff * &GaussRat::from_int((nu.get(j) - t) as i64);
                    }
                }
                for (slot, &j) in nz.iter().enumerate() {
                    let e = rho.get(slot) as usize;
                    if e > 0 {
                        coeff = &coeff * &pow[j][e];
                    }
                }
                if !coeff.is_zero() {
                    row.push((dst.index_of(&nu) as u32, coeff));
                }
            }
            row.sort_by_key(|&(c, _)| c);
            rows.push(row);
        }
    }
    ExactMat::from_sparse_rows(rows, n_cols)
}

/// Symbolic power piece `I^(i)_k`: forms of degree k vanishing to order
/// >= i at every node. For i <= 0 this is all of `R_k`.
pub fn symbolic_piece(nodes: &NodeSet, i: i64, k: u32) -> GradedPiece {
    let n_vars = nodes.n_vars();
    if i <= 0 || nodes.is_empty() {
        let mut piece = full_piece(n_vars, k);
        piece.label = PieceLabel::SymbolicPower { i, k };
        return piece;
    }
    let ambient = basis_size(n_vars, k);
    // a nonzero form cannot vanish beyond its degree at a point
    if (k as i64) < i {
        return GradedPiece::new(
            n_vars,
            k,
            Subspace::zero(ambient),
            PieceLabel::SymbolicPower { i, k },
        );
    }
    let mat = jet_matrix(nodes, i, k);
    GradedPiece::new(
        n_vars,
        k,
        linalg::kernel_basis(&mat),
        PieceLabel::SymbolicPower { i, k },
    )
}

/// `(I^(i) J)_k = sum_j f_j I^(i)_{k-d+1}`. For i <= 0 this is `J_k`.
pub fn ideal_times_jacobian_piece(
    nodes: &NodeSet,
    f: &HomoPoly,
    i: i64,
    k: u32,
) -> GradedPiece {
    let n_vars = f.n_vars();
    let d = f.degree();
    let ambient = basis_size(n_vars, k);
    let label = PieceLabel::IdealTimesJacobian { i, k };
    if k + 1 < d {
        return GradedPiece::new(n_vars, k, Subspace::zero(ambient), label);
    }
    let inner = symbolic_piece(nodes, i, k + 1 - d);
    let src = DegreeBasis::new(n_vars, k + 1 - d);
    let dst = DegreeBasis::new(n_vars, k);
    let mut rows: Vec<SparseVec> = Vec::new();
    for fj in f.gradient() {
        if fj.is_zero() {
            continue;
        }
        for g in inner.space().basis_rows() {
            let row = src.product_row(&fj, g, &dst);
            if !row.is_empty() {
                rows.push(row);
            }
        }
    }
    GradedPiece::new(n_vars, k, Subspace::span_sparse(rows, ambient), label)
}

/// Degreewise minimal generators of the radical node ideal I, up to
/// degree `k_max`: in each degree j, polynomials spanning a complement of
/// `R_1 * I_{j-1}` inside `I_j`. The union generates I in degrees <= k_max.
pub fn minimal_generators_up_to(nodes: &NodeSet, k_max: u32) -> Vec<(u32, HomoPoly)> {
    let n_vars = nodes.n_vars();
    let mut gens: Vec<(u32, HomoPoly)> = Vec::new();
    let mut prev: Option<GradedPiece> = None;
    for j in 0..=k_max {
        let ij = symbolic_piece(nodes, 1, j);
        let dst = DegreeBasis::new(n_vars, j);
        // span of R_1 * I_{j-1}
        let mut covered = match &prev {
            None => Subspace::zero(dst.len()),
            Some(p) => {
                let src = DegreeBasis::new(n_vars, j - 1);
                let mut rows = Vec::new();
                for l in 0..n_vars {
                    let shift = ExpVec::var(n_vars, l);
                    for g in p.space().basis_rows() {
                        rows.push(src.shifted_row(g, &shift, &dst));
                    }
                }
                Subspace::span_sparse(rows, dst.len())
            }
        };
        if covered.dim() < ij.dim() {
            for row in ij.space().basis_rows() {
                if !covered.contains_vector(row) {
                    gens.push((j, dst.poly_from_sparse(row)));
                    covered = covered
                        .sum(&Subspace::span_sparse(vec![row.clone()], dst.len()))
                        .expect("same ambient");
                }
            }
        }
        debug_assert_eq!(covered.dim(), ij.dim());
        prev = Some(ij);
    }
    gens
}

/// Ordinary power piece `(I^i)_k`, spanned by monomial multiples of
/// products of i minimal generators. For i <= 0 this is all of `R_k`.
pub fn ordinary_power_piece(nodes: &NodeSet, i: i64, k: u32) -> GradedPiece {
    let n_vars = nodes.n_vars();
    if i <= 0 || nodes.is_empty() {
        let mut piece = full_piece(n_vars, k);
        piece.label = PieceLabel::OrdinaryPower { i, k };
        return piece;
    }
    let ambient = basis_size(n_vars, k);
    let label = PieceLabel::OrdinaryPower { i, k };
    let gens = minimal_generators_up_to(nodes, k);
    // i-fold products with total degree <= k, deduplicated up to scale
    let mut products: Vec<HomoPoly> = Vec::new();
    let mut seen: BTreeSet<String> = BTreeSet::new();
    let mut stack: Vec<HomoPoly> = Vec::new();
    collect_products(&gens, 0, i as usize, k, &mut stack, &mut products, &mut seen);
    let mut rows: Vec<SparseVec> = Vec::new();
    for p in &products {
        let t = p.degree();
        let src = DegreeBasis::new(n_vars, t);
        let dst = DegreeBasis::new(n_vars, k);
        let p_row = src.sparse_from_poly(p);
        for shift in monomial_basis(n_vars, k - t) {
            rows.push(src.shifted_row(&p_row, &shift, &dst));
        }
    }
    GradedPiece::new(n_vars, k, Subspace::span_sparse(rows, ambient), label)
}

fn collect_products(
    gens: &[(u32, HomoPoly)],
    from: usize,
    remaining: usize,
    budget: u32,
    stack: &mut Vec<HomoPoly>,
    out: &mut Vec<HomoPoly>,
    seen: &mut BTreeSet<String>,
) {
    if remaining == 0 {
        let mut prod = stack[0].clone();
        for g in &stack[1..] {
            prod = prod.mul(g);
        }
        if prod.is_zero() {
            return;
        }
        // canonical key: scale so the first coefficient is 1
        let lead = prod.terms().next().map(|(_, c)| c.clone()).unwrap();
        let canon = prod.scale(&lead.invert().unwrap());
        let key = canon.to_string();
        if seen.insert(key) {
            out.push(prod);
        }
        return;
    }
    for idx in from..gens.len() {
        let (deg, g) = &gens[idx];
        // cheapest completion: reuse this generator for all remaining slots
        if deg * (remaining as u32) > budget {
            continue;
        }
        stack.push(g.clone());
        collect_products(gens, idx, remaining - 1, budget - deg, stack, out, seen);
        stack.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::GaussRat;
    use crate::polyring::ProjPoint;

    fn fermat(n_vars: usize, d: u32) -> HomoPoly {
        let mut f = HomoPoly::zero(n_vars, d);
        for i in 0..n_vars {
            let mut e = vec![0u32; n_vars];
            e[i] = d;
            f.add_term(ExpVec::new(e), GaussRat::one()).unwrap();
        }
        f
    }

    fn coordinate_points(n_vars: usize, count: usize) -> NodeSet {
        let points = (0..count)
            .map(|i| {
                let mut c = vec![0i64; n_vars];
                c[i] = 1;
                ProjPoint::from_ints(&c).unwrap()
            })
            .collect();
        NodeSet::new(points).unwrap()
    }

    #[test]
    fn jacobian_of_fermat() {
        // partials d x_i^{d-1} are independent: dim J_{d-1} = n+1
        let f = fermat(4, 4);
        assert_eq!(jacobian_piece(&f, 3).dim(), 4);
        assert_eq!(jacobian_piece(&f, 2).dim(), 0);
        // dim J_k = (n+1) * dim R_{k-d+1} - relations; for Fermat at k=4:
        // x_i^3 * x_j all distinct monomials -> 16
        assert_eq!(jacobian_piece(&f, 4).dim(), 16);
    }

    #[test]
    fn symbolic_single_coordinate_point() {
        // one point in P^2, i=2, k=2: kernel is {x1^2, x1 x2, x2^2}
        let nodes = coordinate_points(3, 1);
        let piece = symbolic_piece(&nodes, 2, 2);
        assert_eq!(piece.dim(), 3);
        let polys = piece.basis_polys();
        let expect: Vec<HomoPoly> = [[0u32, 2, 0], [0, 1, 1], [0, 0, 2]]
            .iter()
            .map(|e| {
                HomoPoly::monomial(3, ExpVec::new(e.to_vec()), GaussRat::one()).unwrap()
            })
            .collect();
        assert_eq!(polys, expect);
    }

    #[test]
    fn symbolic_degenerate_degrees() {
        let nodes = coordinate_points(3, 1);
        assert_eq!(symbolic_piece(&nodes, 2, 1).dim(), 0);
        assert_eq!(symbolic_piece(&nodes, 0, 2).dim(), 6);
        assert_eq!(symbolic_piece(&nodes, -3, 1).dim(), 3);
    }

    #[test]
    fn minimal_generators_coordinate_points() {
        // n+1 coordinate points in P^n: I generated by x_i x_j, i != j
        let nodes = coordinate_points(4, 4);
        let gens = minimal_generators_up_to(&nodes, 4);
        assert_eq!(gens.len(), 6);
        assert!(gens.iter().all(|(d, g)| *d == 2 && g.num_terms() == 1));
        // single point: generators x_1 .. x_n in degree 1
        let single = coordinate_points(4, 1);
        let gens = minimal_generators_up_to(&single, 3);
        assert_eq!(gens.len(), 3);
        assert!(gens.iter().all(|(d, _)| *d == 1));
    }

    #[test]
    fn ordinary_powers_coordinate_points() {
        let nodes = coordinate_points(4, 4);
        // sharp counterexample: I^(2)_3 != (I^2)_3 = 0
        assert_eq!(ordinary_power_piece(&nodes, 2, 3).dim(), 0);
        let sym3 = symbolic_piece(&nodes, 2, 3);
        assert_eq!(sym3.dim(), 1); // spanned by x0 x1 x2 x3... degree 3? see below
        // equality from degree 4 on
        for k in 4..=6 {
            let ord = ordinary_power_piece(&nodes, 2, k);
            let sym = symbolic_piece(&nodes, 2, k);
            assert_eq!(ord.space(), sym.space(), "k = {k}");
        }
    }

    #[test]
    fn product_piece_contains_jacobian_times_ideal() {
        let f = fermat(3, 3);
        let nodes = coordinate_points(3, 1);
        let ij = ideal_times_jacobian_piece(&nodes, &f, 1, 4);
        let j = jacobian_piece(&f, 4);
        let sym2 = symbolic_piece(&nodes, 2, 4);
        assert!(j.space().contains(ij.space()).unwrap());
        assert!(sym2.space().contains(ij.space()).unwrap());
        // i <= 0 gives J_k
        let j_again = ideal_times_jacobian_piece(&nodes, &f, 0, 4);
        assert_eq!(j_again.space(), j.space());
    }

    #[test]
    fn containment_chain() {
        let nodes = coordinate_points(3, 2);
        for k in 2..=5 {
            for i in 1..=2i64 {
                let ord = ordinary_power_piece(&nodes, i, k);
                let sym = symbolic_piece(&nodes, i, k);
                let next = symbolic_piece(&nodes, i + 1, k);
                assert!(sym.space().contains(ord.space()).unwrap());
                assert!(sym.space().contains(next.space()).unwrap());
            }
        }
    }
}
