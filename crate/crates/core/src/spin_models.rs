//! Matrix content of the first-order equations for spin 1/2, 1 and 3/2.
//!
//! Every model has the block layout `(physical, auxiliary, spinor)` with
//! sizes `(n, a, n)`: `(2, 0, 2)`, `(3, 3, 3)` and `(4, 2, 4)`. The kinetic
//! matrices are
//!
//! ```text
//!              [ 0       aux_i   s_i ]
//! B_i = g⁻¹ ·  [ aux_i†  0       0   ]
//!              [ s_i     0       0   ]
//! ```
//!
//! with `g = sħ`. For spin 1/2 the auxiliary block is empty and `B_i`
//! reduces to the off-diagonal Pauli form.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::{levi_civita, rational, ExtScalar, Rational, SymMatrix, SymScalar};
use crate::error::{Error, Result};
use crate::heisenberg::OperatorPolynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Spin {
    Half,
    One,
    ThreeHalves,
}

impl Spin {
    pub const ALL: [Spin; 3] = [Spin::Half, Spin::One, Spin::ThreeHalves];

    /// `2s`.
    pub fn twice(self) -> u32 {
        match self {
            Spin::Half => 1,
            Spin::One => 2,
            Spin::ThreeHalves => 3,
        }
    }

    pub fn value(self) -> Rational {
        rational::frac(i64::from(self.twice()), 2)
    }

    /// `2s + 1`.
    pub fn multiplicity(self) -> usize {
        self.twice() as usize + 1
    }

    /// Columns of the auxiliary matrices (`N_i` or `K_i`).
    pub fn aux_cols(self) -> usize {
        match self {
            Spin::Half => 0,
            Spin::One => 3,
            Spin::ThreeHalves => 2,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Spin::Half => "1/2",
            Spin::One => "1",
            Spin::ThreeHalves => "3/2",
        }
    }
}

impl fmt::Display for Spin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Spin {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "1/2" | "0.5" => Ok(Spin::Half),
            "1" | "1.0" => Ok(Spin::One),
            "3/2" | "1.5" => Ok(Spin::ThreeHalves),
            other => Err(Error::UnsupportedSpin(other.to_string())),
        }
    }
}

impl Serialize for Spin {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.label())
    }
}

/// Full matrix content of one first-order system.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinModel {
    pub spin: Spin,
    /// Sizes of the diagonal blocks; the first one is the physical block.
    pub blocks: Vec<usize>,
    pub spin_matrices: [SymMatrix; 3],
    /// `N_i` (spin 1) or `K_i` (spin 3/2).
    pub aux_matrices: Option<[SymMatrix; 3]>,
    /// `g = sħ`.
    pub norm_factor: SymScalar,
    /// `g⁻¹`, kept separately since scalars have no division.
    pub inv_norm_factor: SymScalar,
    pub a: SymMatrix,
    pub b: [SymMatrix; 3],
    pub c: SymMatrix,
    pub eta: SymMatrix,
    /// `A' = C/2m`.
    pub a_adj: SymMatrix,
    /// `C' = 2mA`.
    pub c_adj: SymMatrix,
    /// Constraint factor `(2mħ)⁻¹`, spin 3/2 only.
    pub alpha: Option<SymScalar>,
    /// `ψ = S(p) ψ_free`, a `D x n_free` polynomial in the momenta.
    pub embedding: OperatorPolynomial,
}

impl SpinModel {
    pub fn physical_dim(&self) -> usize {
        self.blocks[0]
    }

    pub fn total_dim(&self) -> usize {
        self.blocks.iter().sum()
    }

    /// Named matrix fields, in a fixed order, for export.
    pub fn named_matrices(&self) -> Vec<(String, SymMatrix)> {
        let mut out = Vec::new();
        for (i, s) in self.spin_matrices.iter().enumerate() {
            out.push((format!("s{}", i + 1), s.clone()));
        }
        if let Some(aux) = &self.aux_matrices {
            let name = if self.spin == Spin::One { "N" } else { "K" };
            for (i, m) in aux.iter().enumerate() {
                out.push((format!("{name}{}", i + 1), m.clone()));
            }
        }
        out.push(("A".into(), self.a.clone()));
        for (i, m) in self.b.iter().enumerate() {
            out.push((format!("B{}", i + 1), m.clone()));
        }
        out.push(("C".into(), self.c.clone()));
        out.push(("eta".into(), self.eta.clone()));
        out.push(("A_adj".into(), self.a_adj.clone()));
        out.push(("C_adj".into(), self.c_adj.clone()));
        out
    }
}

fn hbar_times(c: ExtScalar) -> SymScalar {
    SymScalar::monomial([0, 0, 1], c)
}

pub fn pauli_matrices() -> [SymMatrix; 3] {
    let one = SymScalar::one();
    let i = SymScalar::i();
    [
        SymMatrix::from_fn(2, 2, |r, c| if r != c { one.clone() } else { SymScalar::zero() }),
        SymMatrix::from_fn(2, 2, |r, c| match (r, c) {
            (0, 1) => -&i,
            (1, 0) => i.clone(),
            _ => SymScalar::zero(),
        }),
        SymMatrix::diagonal(&[SymScalar::one(), SymScalar::int(-1)]),
    ]
}

pub fn build_spin_matrices(spin: Spin) -> [SymMatrix; 3] {
    match spin {
        Spin::Half => {
            let half_hbar = hbar_times(ExtScalar::frac(1, 2));
            pauli_matrices().map(|s| s.scale(&half_hbar))
        }
        Spin::One => std::array::from_fn(|i| {
            SymMatrix::from_fn(3, 3, |j, k| hbar_times(ExtScalar::i().scale(&rational::int(-levi_civita(i, j, k)))))
        }),
        Spin::ThreeHalves => {
            let r3 = ExtScalar::surd(rational::frac(1, 2), 3);
            let one = ExtScalar::one();
            let s1 = [(0, 1, &r3), (1, 0, &r3), (1, 2, &one), (2, 1, &one), (2, 3, &r3), (3, 2, &r3)];
            let mut m1 = SymMatrix::zeros(4, 4);
            let mut m2 = SymMatrix::zeros(4, 4);
            for &(r, c, v) in &s1 {
                m1[(r, c)] = hbar_times(v.clone());
                // s2 carries -i above the diagonal and +i below
                let phase = if c > r { -ExtScalar::i() } else { ExtScalar::i() };
                m2[(r, c)] = hbar_times(&phase * v);
            }
            let m3 = SymMatrix::diagonal(&[
                hbar_times(ExtScalar::frac(3, 2)),
                hbar_times(ExtScalar::frac(1, 2)),
                hbar_times(ExtScalar::frac(-1, 2)),
                hbar_times(ExtScalar::frac(-3, 2)),
            ]);
            [m1, m2, m3]
        }
    }
}

/// The conjugates `K_i⁺` (2 x 4) as written for spin 3/2.
pub fn k_adjoint_matrices() -> [SymMatrix; 3] {
    let r32 = ExtScalar::surd(rational::frac(1, 2), 6); // √(3/2)
    let r12 = ExtScalar::surd(rational::frac(1, 2), 2); // √(1/2)
    let i = ExtScalar::i();
    let row = |entries: &[(usize, usize, ExtScalar)]| {
        let mut m = SymMatrix::zeros(2, 4);
        for (r, c, v) in entries {
            m[(*r, *c)] = hbar_times(v.clone());
        }
        m
    };
    [
        row(&[(0, 0, -&r32), (0, 2, r12.clone()), (1, 1, -&r12), (1, 3, r32.clone())]),
        row(&[
            (0, 0, -(&i * &r32)),
            (0, 2, -(&i * &r12)),
            (1, 1, -(&i * &r12)),
            (1, 3, -(&i * &r32)),
        ]),
        row(&[(0, 1, ExtScalar::sqrt2()), (1, 2, ExtScalar::sqrt2())]),
    ]
}

pub fn build_aux_matrices(spin: Spin) -> Result<[SymMatrix; 3]> {
    match spin {
        Spin::Half => Err(Error::WrongSpin { operation: "auxiliary matrices", spin }),
        // N_i: ħ in row i of the first column
        Spin::One => Ok(std::array::from_fn(|i| SymMatrix::unit(3, 3, i, 0, SymScalar::hbar()))),
        Spin::ThreeHalves => Ok(k_adjoint_matrices().map(|k| k.conj_transpose())),
    }
}

pub fn norm_factor(spin: Spin) -> (SymScalar, SymScalar) {
    let s = spin.value();
    let inv = Rational::from_integer(2.into()) / rational::int(i64::from(spin.twice()));
    (
        SymScalar::hbar().scale(&s),
        SymScalar::symbols(0, 0, -1).scale(&inv),
    )
}

pub fn build_model(spin: Spin) -> SpinModel {
    let n = spin.multiplicity();
    let na = spin.aux_cols();
    let d = 2 * n + na;
    let spin_matrices = build_spin_matrices(spin);
    let aux_matrices = build_aux_matrices(spin).ok();
    let (g, g_inv) = norm_factor(spin);

    let b = std::array::from_fn(|i| {
        let mut m = SymMatrix::zeros(d, d);
        if let Some(aux) = &aux_matrices {
            m.set_block(0, n, &aux[i]);
            m.set_block(n, 0, &aux[i].conj_transpose());
        }
        m.set_block(0, n + na, &spin_matrices[i]);
        m.set_block(n + na, 0, &spin_matrices[i]);
        m.scale(&g_inv)
    });

    let projector = |upper: bool| {
        SymMatrix::diagonal(
            &(0..d)
                .map(|k| if (k < n) == upper { SymScalar::one() } else { SymScalar::zero() })
                .collect::<Vec<_>>(),
        )
    };
    let a = projector(true);
    let two_m = SymScalar::int(2) * SymScalar::m();
    let inv_two_m = SymScalar::frac(1, 2) * SymScalar::symbols(-1, 0, 0);
    let c = projector(false).scale(&two_m);
    let eta = &(&a * &a).scale(&SymScalar::int(2)) - &SymMatrix::identity(d);
    let a_adj = c.scale(&inv_two_m);
    let c_adj = a.scale(&two_m);
    let alpha = (spin == Spin::ThreeHalves).then(|| SymScalar::frac(1, 2) * SymScalar::symbols(-1, 0, -1));

    let embedding = constraint_embedding_parts(spin, &spin_matrices, aux_matrices.as_ref(), alpha.as_ref());

    SpinModel {
        spin,
        blocks: vec![n, na, n].into_iter().filter(|&k| k > 0).collect(),
        spin_matrices,
        aux_matrices,
        norm_factor: g,
        inv_norm_factor: g_inv,
        a,
        b,
        c,
        eta,
        a_adj,
        c_adj,
        alpha,
        embedding,
    }
}

fn constraint_embedding_parts(
    spin: Spin,
    s: &[SymMatrix; 3],
    aux: Option<&[SymMatrix; 3]>,
    alpha: Option<&SymScalar>,
) -> OperatorPolynomial {
    let n = spin.multiplicity();
    let na = spin.aux_cols();
    let d = 2 * n + na;
    let aux = match aux {
        None => return OperatorPolynomial::constant(SymMatrix::identity(d)),
        Some(aux) => aux,
    };
    let factor = match (spin, alpha) {
        // -(2α/3) with α = (2mħ)⁻¹
        (Spin::ThreeHalves, Some(alpha)) => alpha.scale(&rational::frac(-2, 3)),
        _ => SymScalar::frac(-1, 2) * SymScalar::symbols(-1, 0, -1),
    };
    let mut out = OperatorPolynomial::zero(d, n);
    let mut top = SymMatrix::zeros(d, n);
    top.set_block(0, 0, &SymMatrix::identity(n));
    out = &out + &OperatorPolynomial::constant(top);
    for i in 0..3 {
        let mut coeff = SymMatrix::zeros(d, n);
        coeff.set_block(n, 0, &aux[i].conj_transpose().scale(&factor));
        coeff.set_block(n + na, 0, &s[i].scale(&factor));
        out = &out + &OperatorPolynomial::momentum(i, coeff);
    }
    out
}

pub fn constraint_embedding(spin: Spin) -> OperatorPolynomial {
    build_model(spin).embedding
}
