//! Exact checks of the matrix identities and constraints behind the
//! first-order systems.
//!
//! Every check compares exact values; identities in the momenta are compared
//! coefficient-wise as polynomials in commuting `p₁, p₂, p₃` (and `E`).

use serde::Serialize;

use crate::algebra::{kronecker, levi_civita, rational, Rational, SymMatrix, SymScalar};
use crate::error::{Error, Result};
use crate::heisenberg::{reduce_to_second_order, spin_orbit_decompose, Coupling, Monomial, OperatorPolynomial};
use crate::spin_models::{Spin, SpinModel};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    pub location: String,
    pub difference: SymMatrix,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub check_name: String,
    pub spin: Spin,
    pub passed: bool,
    pub witness: Option<Witness>,
}

/// Collects comparisons and keeps the first failure.
struct Tally {
    name: &'static str,
    spin: Spin,
    witness: Option<Witness>,
}

impl Tally {
    fn new(name: &'static str, spin: Spin) -> Self {
        Self { name, spin, witness: None }
    }

    fn matrices(&mut self, location: impl FnOnce() -> String, lhs: &SymMatrix, rhs: &SymMatrix) {
        if self.witness.is_some() {
            return;
        }
        let diff = lhs.try_sub(rhs).unwrap_or_else(|e| panic!("{}: {e}", self.name));
        if !diff.is_zero() {
            self.witness = Some(Witness { location: location(), difference: diff });
        }
    }

    fn zero(&mut self, location: impl FnOnce() -> String, m: &SymMatrix) {
        self.matrices(location, m, &SymMatrix::zeros(m.rows(), m.cols()));
    }

    fn polys(&mut self, location: &str, lhs: &OperatorPolynomial, rhs: &OperatorPolynomial) {
        if self.witness.is_some() {
            return;
        }
        let diff = lhs.try_add(&-rhs).unwrap_or_else(|e| panic!("{}: {e}", self.name));
        let first = diff.terms().next().map(|(m, c)| (m.to_string(), c.clone()));
        if let Some((m, c)) = first {
            self.witness = Some(Witness { location: format!("{location}, monomial {m}"), difference: c });
        }
    }

    fn finish(self) -> CheckReport {
        CheckReport {
            check_name: self.name.to_string(),
            spin: self.spin,
            passed: self.witness.is_none(),
            witness: self.witness,
        }
    }
}

fn require(model: &SpinModel, operation: &'static str, allowed: &[Spin]) -> Result<()> {
    if allowed.contains(&model.spin) {
        Ok(())
    } else {
        Err(Error::WrongSpin { operation, spin: model.spin })
    }
}

fn pair(i: usize, j: usize) -> String {
    format!("(i,j)=({},{})", i + 1, j + 1)
}

fn aux_or_err(model: &SpinModel) -> &[SymMatrix; 3] {
    model.aux_matrices.as_ref().expect("spin >= 1 has auxiliary matrices")
}

fn two_m() -> SymScalar {
    SymScalar::int(2) * SymScalar::m()
}

/// `σ_iσ_j = δ_ij + iε_ijkσ_k`.
pub fn check_pauli_product(model: &SpinModel) -> Result<CheckReport> {
    require(model, "Pauli product identity", &[Spin::Half])?;
    let sigma = model.spin_matrices.clone().map(|s| s.scale(&model.inv_norm_factor));
    let mut t = Tally::new("pauli product", model.spin);
    for i in 0..3 {
        for j in 0..3 {
            let mut rhs = SymMatrix::identity(2).scale(&SymScalar::int(kronecker(i, j)));
            for (k, s) in sigma.iter().enumerate() {
                rhs = &rhs + &s.scale(&SymScalar::i().scale(&rational::int(levi_civita(i, j, k))));
            }
            t.matrices(|| pair(i, j), &(&sigma[i] * &sigma[j]), &rhs);
        }
    }
    Ok(t.finish())
}

/// `[s_i, s_j] = iħε_ijk s_k` and `s² = s(s+1)ħ²`.
pub fn check_spin_algebra(model: &SpinModel) -> CheckReport {
    let s = &model.spin_matrices;
    let n = model.spin.multiplicity();
    let mut t = Tally::new("spin algebra", model.spin);
    let i_hbar = SymScalar::hbar().times_i();
    for i in 0..3 {
        for j in 0..3 {
            let mut rhs = SymMatrix::zeros(n, n);
            for (k, sk) in s.iter().enumerate() {
                rhs = &rhs + &sk.scale(&i_hbar.scale(&rational::int(levi_civita(i, j, k))));
            }
            t.matrices(|| format!("[s{}, s{}]", i + 1, j + 1), &s[i].commutator(&s[j]), &rhs);
        }
    }
    let casimir = s.iter().fold(SymMatrix::zeros(n, n), |acc, si| &acc + &(si * si));
    let sv = model.spin.value();
    let expected = SymMatrix::identity(n).scale(&SymScalar::hbar().powi(2).scale(&(&sv * (&sv + rational::int(1)))));
    t.matrices(|| "s²".into(), &casimir, &expected);
    t.finish()
}

/// Symmetrized `g⁻²(aux_j aux_i† + s_j s_i) = δ_ij`, together with the
/// equivalent statement on the upper block of `½{B_i, B_j}`.
pub fn check_square_completeness(model: &SpinModel) -> CheckReport {
    let n = model.spin.multiplicity();
    let s = &model.spin_matrices;
    let g_inv2 = &model.inv_norm_factor * &model.inv_norm_factor;
    let half = SymScalar::frac(1, 2);
    let mut t = Tally::new("square completeness", model.spin);
    let product = |j: usize, i: usize| {
        let mut m = &s[j] * &s[i];
        if let Some(aux) = &model.aux_matrices {
            m = &m + &(&aux[j] * &aux[i].conj_transpose());
        }
        m
    };
    for i in 0..3 {
        for j in i..3 {
            let sym = (&product(j, i) + &product(i, j)).scale(&(&half * &g_inv2));
            let expected = SymMatrix::identity(n).scale(&SymScalar::int(kronecker(i, j)));
            t.matrices(|| pair(i, j), &sym, &expected);
            let anti = model.b[i].anticommutator(&model.b[j]).scale(&half);
            t.matrices(|| format!("½{{B{}, B{}}} upper block", i + 1, j + 1), &anti.block(0, n, 0, n), &expected);
        }
    }
    t.finish()
}

/// For spin 1: the off-diagonal blocks of `(B·p)²` vanish as polynomials
/// in commuting `p`, and `w ∝ (s·p)u` has zero divergence.
pub fn check_cross_terms(model: &SpinModel) -> Result<CheckReport> {
    require(model, "vanishing cross terms", &[Spin::One])?;
    let aux = aux_or_err(model);
    let s = &model.spin_matrices;
    let mut t = Tally::new("cross terms", model.spin);
    for i in 0..3 {
        for j in i..3 {
            let left = &(&aux[j].conj_transpose() * &s[i]) + &(&aux[i].conj_transpose() * &s[j]);
            t.zero(|| format!("aux_j† s_i symmetrized, {}", pair(i, j)), &left);
            let right = &(&s[j] * &aux[i]) + &(&s[i] * &aux[j]);
            t.zero(|| format!("s_j aux_i symmetrized, {}", pair(i, j)), &right);
        }
    }
    // p·w with w = (s·p)u: the row vector (p1, p2, p3) times s·p
    let mut p_row = OperatorPolynomial::zero(1, 3);
    for i in 0..3 {
        p_row = &p_row + &OperatorPolynomial::momentum(i, SymMatrix::unit(1, 3, 0, i, SymScalar::one()));
    }
    let divergence = &p_row * &OperatorPolynomial::dot_momentum(s);
    t.polys("p·(s·p)", &divergence, &OperatorPolynomial::zero(1, 3));
    Ok(t.finish())
}

/// For spin 1: the second block of `ψ = S(p)u` only has its first
/// component, i.e. `v₂ = v₃ = 0`.
pub fn check_scalar_component(model: &SpinModel) -> Result<CheckReport> {
    require(model, "scalar second component", &[Spin::One])?;
    let mut t = Tally::new("scalar component", model.spin);
    let v_rows = model.embedding.block(3, 3, 0, 3);
    let tail = v_rows.block(1, 2, 0, 3);
    t.polys("v2, v3 rows of S(p)", &tail, &OperatorPolynomial::zero(2, 3));
    let factor = SymScalar::frac(-1, 2) * SymScalar::symbols(-1, 0, -1) * SymScalar::hbar();
    let mut expected = OperatorPolynomial::zero(1, 3);
    for i in 0..3 {
        expected = &expected + &OperatorPolynomial::momentum(i, SymMatrix::unit(1, 3, 0, i, factor.clone()));
    }
    t.polys("v1 row of S(p)", &v_rows.block(0, 1, 0, 3), &expected);
    Ok(t.finish())
}

/// The embedding solves the lower block rows of the free first-order
/// equation: rows below the physical block of `(B·p + C) S(p)` vanish.
pub fn check_constraint_rows(model: &SpinModel) -> Result<CheckReport> {
    require(model, "constraint rows", &[Spin::One, Spin::ThreeHalves])?;
    let n = model.physical_dim();
    let d = model.total_dim();
    let mut t = Tally::new("constraint rows", model.spin);
    let op = &OperatorPolynomial::dot_momentum(&model.b) + &OperatorPolynomial::constant(model.c.clone());
    let applied = &op * &model.embedding;
    let cols = model.embedding.cols();
    t.polys("lower rows of (B·p + C)S(p)", &applied.block(n, d - n, 0, cols), &OperatorPolynomial::zero(d - n, cols));
    Ok(t.finish())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CommutationConstant {
    /// The scalar `c` in `aux_i aux_i† + s_i² = c·1`.
    #[serde(serialize_with = "serialize_display")]
    pub computed: SymScalar,
    #[serde(serialize_with = "serialize_display")]
    pub expected: SymScalar,
    pub hbar_exponent: Option<i32>,
}

fn serialize_display<S: serde::Serializer>(v: &SymScalar, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// `aux_i aux_j† + s_i s_j = i g ε_ijk s_k + g² δ_ij`.
pub fn check_commutation_identity(model: &SpinModel) -> Result<(CheckReport, CommutationConstant)> {
    require(model, "commutation identity", &[Spin::One, Spin::ThreeHalves])?;
    let aux = aux_or_err(model);
    let s = &model.spin_matrices;
    let n = model.spin.multiplicity();
    let g = &model.norm_factor;
    let g2 = g * g;
    let mut t = Tally::new("commutation identity", model.spin);
    let lhs = |i: usize, j: usize| &(&aux[i] * &aux[j].conj_transpose()) + &(&s[i] * &s[j]);
    for i in 0..3 {
        for j in 0..3 {
            let mut rhs = SymMatrix::identity(n).scale(&g2.scale(&rational::int(kronecker(i, j))));
            for (k, sk) in s.iter().enumerate() {
                rhs = &rhs + &sk.scale(&g.times_i().scale(&rational::int(levi_civita(i, j, k))));
            }
            t.matrices(|| pair(i, j), &lhs(i, j), &rhs);
        }
    }
    let diagonal: Vec<Option<SymScalar>> = (0..3).map(|i| lhs(i, i).as_scalar_identity()).collect();
    let computed = match &diagonal[..] {
        [Some(a), Some(b), Some(c)] if a == b && b == c => a.clone(),
        _ => SymScalar::zero(),
    };
    let hbar_exponent = computed.single_term().map(|(e, _)| e[2]);
    Ok((t.finish(), CommutationConstant { computed, expected: g2, hbar_exponent }))
}

/// `A'A = 0, C'C = 0, A'B_i = B_iA, A'C + C'A = 2m, C'B_i = B_iC`.
pub fn check_linearization_conditions(model: &SpinModel) -> CheckReport {
    let d = model.total_dim();
    let (a, c, ap, cp) = (&model.a, &model.c, &model.a_adj, &model.c_adj);
    let mut t = Tally::new("linearization conditions", model.spin);
    t.zero(|| "A'A".into(), &(ap * a));
    t.zero(|| "C'C".into(), &(cp * c));
    t.matrices(|| "A'C + C'A".into(), &(&(ap * c) + &(cp * a)), &SymMatrix::identity(d).scale(&two_m()));
    for (i, b) in model.b.iter().enumerate() {
        t.matrices(|| format!("A'B{0} vs B{0}A", i + 1), &(ap * b), &(b * a));
        t.matrices(|| format!("C'B{0} vs B{0}C", i + 1), &(cp * b), &(b * c));
    }
    t.finish()
}

/// Projector, hermiticity and η relations of the block operators.
pub fn check_model_structure(model: &SpinModel) -> CheckReport {
    let d = model.total_dim();
    let id = SymMatrix::identity(d);
    let (a, c, eta) = (&model.a, &model.c, &model.eta);
    let c_proj = &model.a_adj;
    let mut t = Tally::new("model structure", model.spin);
    t.matrices(|| "A² = A".into(), &(a * a), a);
    t.matrices(|| "(C/2m)² = C/2m".into(), &(c_proj * c_proj), c_proj);
    t.matrices(|| "A + C/2m = 1".into(), &(a + c_proj), &id);
    t.zero(|| "A·C".into(), &(a * c));
    t.matrices(|| "C' = 2mA".into(), &model.c_adj, &a.scale(&two_m()));
    t.matrices(|| "η = 2A² − 1".into(), eta, &(&(a * a).scale(&SymScalar::int(2)) - &id));
    t.matrices(|| "η² = 1".into(), &(eta * eta), &id);
    t.zero(|| "[η, A]".into(), &eta.commutator(a));
    t.zero(|| "[η, C]".into(), &eta.commutator(c));
    for (i, b) in model.b.iter().enumerate() {
        t.matrices(|| format!("B{} hermitian", i + 1), b, &b.conj_transpose());
        t.zero(|| format!("{{B{}, η}}", i + 1), &b.anticommutator(eta));
    }
    t.finish()
}

fn p_squared(n: usize) -> OperatorPolynomial {
    let mut out = OperatorPolynomial::zero(n, n);
    for i in 0..3 {
        let mut m = Monomial::ONE;
        m.p[i] = 2;
        out = &out + &OperatorPolynomial::term(m, SymMatrix::identity(n));
    }
    out
}

/// `(B·p)² S(p) = p² S(p)`.
pub fn check_constrained_square(model: &SpinModel) -> CheckReport {
    let d = model.total_dim();
    let bp = OperatorPolynomial::dot_momentum(&model.b);
    let lhs = &(&bp * &bp) * &model.embedding;
    let rhs = &p_squared(d) * &model.embedding;
    let mut t = Tally::new("constrained square", model.spin);
    t.polys("(B·p)² S(p) vs p² S(p)", &lhs, &rhs);
    t.finish()
}

/// `(A'E − B·p + C')(AE + B·p + C) S(p) = (2mE − p²) S(p)`.
pub fn check_factorization(model: &SpinModel) -> CheckReport {
    let d = model.total_dim();
    let bp = OperatorPolynomial::dot_momentum(&model.b);
    let energy = |m: &SymMatrix| OperatorPolynomial::term(Monomial::energy(), m.clone());
    let left = &(&energy(&model.a_adj) - &bp) + &OperatorPolynomial::constant(model.c_adj.clone());
    let right = &(&energy(&model.a) + &bp) + &OperatorPolynomial::constant(model.c.clone());
    let lhs = &(&left * &right) * &model.embedding;
    let schroedinger = &OperatorPolynomial::scalar(Monomial::energy(), two_m(), d) - &p_squared(d);
    let rhs = &schroedinger * &model.embedding;
    let mut t = Tally::new("factorization", model.spin);
    t.polys("(A'E − B·p + C')(AE + B·p + C)S vs (2mE − p²)S", &lhs, &rhs);
    t.finish()
}

/// Zero-based indices of `v₂, v₃` in the nine-component spin-1 system.
pub const SPIN1_DROPPED: [usize; 2] = [4, 5];

/// Deletes the `v₂, v₃` rows and columns of the spin-1 system, leaving the
/// seven-component form, and checks that nothing but `2m v₂,₃ = 0` is lost.
pub fn reduce_spin1_to_7(model: &SpinModel) -> Result<(SpinModel, CheckReport)> {
    require(model, "seven-component reduction", &[Spin::One])?;
    if model.total_dim() != 9 {
        return Err(Error::BlockStructure("expected the nine-component spin-1 system".into()));
    }
    let mut t = Tally::new("seven-component reduction", model.spin);
    let d = model.total_dim();
    let only_c_diagonal = |m: &SymMatrix, k: usize, diag: SymScalar| {
        let mut expected_row = SymMatrix::zeros(1, d);
        expected_row[(0, k)] = diag.clone();
        let mut expected_col = SymMatrix::zeros(d, 1);
        expected_col[(k, 0)] = diag;
        (m.block(k, 1, 0, d) == expected_row) && (m.block(0, d, k, 1) == expected_col)
    };
    for &k in &SPIN1_DROPPED {
        let ok = model.b.iter().all(|b| only_c_diagonal(b, k, SymScalar::zero()))
            && only_c_diagonal(&model.a, k, SymScalar::zero())
            && only_c_diagonal(&model.c, k, two_m());
        if !ok {
            return Err(Error::BlockStructure(format!("row {} couples to other components", k + 1)));
        }
    }
    let drop = |m: &SymMatrix| m.remove_rows_cols(&SPIN1_DROPPED, &SPIN1_DROPPED);
    let reduced = SpinModel {
        spin: model.spin,
        blocks: vec![3, 1, 3],
        spin_matrices: model.spin_matrices.clone(),
        aux_matrices: model.aux_matrices.clone(),
        norm_factor: model.norm_factor.clone(),
        inv_norm_factor: model.inv_norm_factor.clone(),
        a: drop(&model.a),
        b: model.b.clone().map(|b| drop(&b)),
        c: drop(&model.c),
        eta: drop(&model.eta),
        a_adj: drop(&model.a_adj),
        c_adj: drop(&model.c_adj),
        alpha: model.alpha.clone(),
        embedding: model.embedding.remove_rows_cols(&SPIN1_DROPPED, &[]),
    };
    let full = check_factorization(&reduced);
    if let Some(w) = full.witness {
        t.witness = Some(Witness { location: format!("factorization: {}", w.location), ..w });
    }
    let h_full = reduce_to_second_order(model, Coupling::Standard)?;
    let h_reduced = reduce_to_second_order(&reduced, Coupling::Standard)?;
    t.polys("second-order reduction", &h_reduced, &h_full);
    Ok((reduced, t.finish()))
}

/// Spin-orbit strength of the oscillator reduction for each spin.
pub fn expected_kappa(spin: Spin) -> Rational {
    match spin {
        Spin::Half => rational::int(2),
        Spin::One => rational::int(1),
        Spin::ThreeHalves => rational::frac(2, 3),
    }
}

/// The reduced Hamiltonian has the oscillator form with `c = −3/2` and the
/// tabulated spin-orbit strength.
pub fn check_oscillator_reduction(model: &SpinModel) -> Result<CheckReport> {
    let mut t = Tally::new("oscillator reduction", model.spin);
    let h = reduce_to_second_order(model, Coupling::Standard)?;
    match spin_orbit_decompose(&h, model) {
        Ok(form) => {
            let n = model.physical_dim();
            let as_matrix = |r: &Rational| SymMatrix::identity(n).scale(&SymScalar::rational(r.clone()));
            t.matrices(|| "constant c".into(), &as_matrix(&form.c), &as_matrix(&rational::frac(-3, 2)));
            t.matrices(|| "strength κ".into(), &as_matrix(&form.kappa), &as_matrix(&expected_kappa(model.spin)));
        }
        Err(e) => {
            t.witness = Some(Witness { location: e.to_string(), difference: SymMatrix::zeros(0, 0) });
        }
    }
    Ok(t.finish())
}

/// Every check that applies to the model's spin.
pub fn run_all(model: &SpinModel) -> Result<Vec<CheckReport>> {
    let mut out = vec![check_spin_algebra(model), check_model_structure(model)];
    if model.spin == Spin::Half {
        out.push(check_pauli_product(model)?);
    }
    out.push(check_square_completeness(model));
    if model.spin == Spin::One {
        out.push(check_cross_terms(model)?);
        out.push(check_scalar_component(model)?);
    }
    if model.spin != Spin::Half {
        out.push(check_constraint_rows(model)?);
        out.push(check_commutation_identity(model)?.0);
    }
    out.push(check_linearization_conditions(model));
    out.push(check_constrained_square(model));
    out.push(check_factorization(model));
    if model.spin == Spin::One && model.total_dim() == 9 {
        out.push(reduce_spin1_to_7(model)?.1);
    }
    out.push(check_oscillator_reduction(model)?);
    Ok(out)
}
