//! Named rank-8 matrices: U and its inverse, cmU = U·U, the exchange matrix
//! J, the Sylvester–Hadamard matrix, the two bracket matrices of the odd
//! power laws, and an E8 simple-root/Cartan pair.
//!
//! U is tabulated as an integer-φ pattern scaled by 1/(2√φ). The widely
//! circulated table of U has the signs of entries (2,3) and (2,4) swapped,
//! which makes rows 2 and 5 equal and the matrix singular; that
//! transcription is kept as [`build_u_as_printed`] for comparison, and
//! [`build_u`] returns the consistent matrix (the one satisfying
//! U·U = cmU and reproduced by the bracket decomposition).

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::field::{rat, GoldenExt, GoldenScalar};
use crate::matrix::{CharPoly, ExactMatrix};

/// Entry of the integer-φ tables: `a + b·φ`.
type PhiInt = (i64, i64);

const Z: PhiInt = (0, 0);
const ONE: PhiInt = (1, 0);
const NEG1: PhiInt = (-1, 0);
const PHI: PhiInt = (0, 1);
const NEG_PHI: PhiInt = (0, -1);
const ONE_MINUS_PHI: PhiInt = (1, -1);
const PHI_MINUS_ONE: PhiInt = (-1, 1);
/// −φ² = −1 − φ
const NEG_PHI2: PhiInt = (-1, -1);

const U_TABLE: [[PhiInt; 8]; 8] = [
    [ONE_MINUS_PHI, Z, Z, Z, Z, Z, Z, NEG_PHI2],
    [Z, NEG1, PHI, Z, Z, PHI, ONE, Z],
    [Z, PHI, Z, NEG1, ONE, Z, PHI, Z],
    [Z, Z, NEG1, PHI, PHI, ONE, Z, Z],
    [Z, Z, ONE, PHI, PHI, NEG1, Z, Z],
    [Z, PHI, Z, ONE, NEG1, Z, PHI, Z],
    [Z, ONE, PHI, Z, Z, PHI, NEG1, Z],
    [NEG_PHI2, Z, Z, Z, Z, Z, Z, ONE_MINUS_PHI],
];

const U_INV_TABLE: [[PhiInt; 8]; 8] = [
    [PHI_MINUS_ONE, Z, Z, Z, Z, Z, Z, NEG_PHI2],
    [Z, NEG_PHI, ONE, Z, Z, ONE, PHI, Z],
    [Z, ONE, Z, NEG_PHI, PHI, Z, ONE, Z],
    [Z, Z, NEG_PHI, ONE, ONE, PHI, Z, Z],
    [Z, Z, PHI, ONE, ONE, NEG_PHI, Z, Z],
    [Z, ONE, Z, PHI, NEG_PHI, Z, ONE, Z],
    [Z, PHI, ONE, Z, Z, ONE, NEG_PHI, Z],
    [NEG_PHI2, Z, Z, Z, Z, Z, Z, PHI_MINUS_ONE],
];

/// Bracket matrix of the odd-power sum law, doubled.
const B_PLUS_2: [[i64; 8]; 8] = [
    [0, 0, 0, 0, 0, 0, 0, 2],
    [0, 1, -1, 0, 0, -1, -1, 0],
    [0, -1, 0, 1, -1, 0, -1, 0],
    [0, 0, 1, -1, -1, -1, 0, 0],
    [0, 0, -1, -1, -1, 1, 0, 0],
    [0, -1, 0, -1, 1, 0, -1, 0],
    [0, -1, -1, 0, 0, -1, 1, 0],
    [2, 0, 0, 0, 0, 0, 0, 0],
];

/// Bracket matrix of the odd-power difference law, doubled.
const B_MINUS_2: [[i64; 8]; 8] = [
    [2, 0, 0, 0, 0, 0, 0, 0],
    [0, -1, -1, 0, 0, -1, 1, 0],
    [0, -1, 0, -1, 1, 0, -1, 0],
    [0, 0, -1, -1, -1, 1, 0, 0],
    [0, 0, 1, -1, -1, -1, 0, 0],
    [0, -1, 0, 1, -1, 0, -1, 0],
    [0, 1, -1, 0, 0, -1, -1, 0],
    [0, 0, 0, 0, 0, 0, 0, 2],
];

/// 1/(2√φ) = ((φ − 1)/2)·√φ
pub fn inv_two_sqrt_phi() -> GoldenExt {
    GoldenExt::new(
        GoldenScalar::zero(),
        GoldenScalar::new(rat(-1, 2), rat(1, 2)),
    )
}

fn from_phi_table(table: &[[PhiInt; 8]; 8]) -> ExactMatrix {
    let s = inv_two_sqrt_phi();
    ExactMatrix::from_fn(8, |i, j| {
        let (a, b) = table[i][j];
        &GoldenExt::from_ints_phi(a, b) * &s
    })
}

fn half_int_table(table: &[[i64; 8]; 8]) -> ExactMatrix {
    ExactMatrix::from_fn(8, |i, j| {
        GoldenExt::from_scalar(GoldenScalar::from_rational(rat(table[i][j], 2)))
    })
}

pub fn build_u() -> ExactMatrix {
    from_phi_table(&U_TABLE)
}

pub fn build_u_inv() -> ExactMatrix {
    from_phi_table(&U_INV_TABLE)
}

/// U with the row-2 sign transcription (rows 2 and 5 identical, singular).
pub fn build_u_as_printed() -> ExactMatrix {
    let mut t = U_TABLE;
    t[2][3] = ONE;
    t[2][4] = NEG1;
    from_phi_table(&t)
}

/// U⁻¹ table with the same row-2 transcription.
pub fn build_u_inv_as_printed() -> ExactMatrix {
    let mut t = U_INV_TABLE;
    t[2][3] = PHI;
    t[2][4] = NEG_PHI;
    from_phi_table(&t)
}

/// cmU = (√5/2)·I + (1/2)·J.
pub fn build_cmu() -> ExactMatrix {
    let half_sqrt5 = GoldenExt::from_scalar(GoldenScalar::new(rat(-1, 2), rat(1, 1)));
    let half = GoldenExt::from_scalar(GoldenScalar::from_rational(rat(1, 2)));
    ExactMatrix::from_fn(8, |i, j| {
        if i == j {
            half_sqrt5.clone()
        } else if i + j == 7 {
            half.clone()
        } else {
            GoldenExt::zero()
        }
    })
}

pub fn build_j() -> ExactMatrix {
    ExactMatrix::exchange(8)
}

pub fn build_bracket_plus() -> ExactMatrix {
    half_int_table(&B_PLUS_2)
}

pub fn build_bracket_minus() -> ExactMatrix {
    half_int_table(&B_MINUS_2)
}

/// Sylvester–Hadamard matrix kept unnormalized, with the normalization
/// carried as `scale² = 2^(−q)` (√2 lies outside the coefficient field).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hadamard {
    pub qubits: u32,
    pub unnormalized: ExactMatrix,
    pub scale_squared: BigRational,
}

impl Hadamard {
    pub fn order(&self) -> usize {
        self.unnormalized.dim()
    }

    /// Characteristic polynomial of the normalized matrix `H/√(2^q)`.
    ///
    /// The coefficient of `x^(n−k)` of the unnormalized polynomial is scaled
    /// by `(scale²)^(k/2)`; odd `k` must vanish because their scale is
    /// irrational.
    pub fn normalized_char_poly(&self) -> Result<CharPoly> {
        let raw = self.unnormalized.char_poly();
        let mut out = Vec::with_capacity(raw.coeffs().len());
        for (k, c) in raw.coeffs().iter().enumerate() {
            if k % 2 == 1 {
                if !c.is_zero() {
                    return Err(Error::InvalidArgument(format!(
                        "coefficient of x^{} is {c}; its normalization needs sqrt(2)",
                        raw.degree() - k
                    )));
                }
                out.push(GoldenExt::zero());
                continue;
            }
            let factor = num_traits::pow(self.scale_squared.clone(), k / 2);
            out.push(c.scale(&GoldenScalar::from_rational(factor)));
        }
        Ok(CharPoly::new(out))
    }

    /// Sign pattern of the unnormalized matrix.
    pub fn signs(&self) -> Vec<Vec<i8>> {
        self.unnormalized
            .rows()
            .map(|r| r.iter().map(|x| if x.is_one() { 1 } else { -1 }).collect())
            .collect()
    }
}

pub fn build_hadamard(qubits: u32) -> Result<Hadamard> {
    if qubits < 1 {
        return Err(Error::InvalidArgument("qubit count must be >= 1".into()));
    }
    if qubits > 12 {
        return Err(Error::InvalidArgument("qubit count must be <= 12".into()));
    }
    let n = 1usize << qubits;
    // H[i][j] = (−1)^popcount(i & j)
    let h = ExactMatrix::from_fn(n, |i, j| {
        GoldenExt::integer(if (i & j).count_ones() % 2 == 0 { 1 } else { -1 })
    });
    Ok(Hadamard {
        qubits,
        unnormalized: h,
        scale_squared: BigRational::new(BigInt::from(1), BigInt::from(1u64 << qubits)),
    })
}

/// E8 simple roots in the even coordinate system, Bourbaki order
/// (node 2 attached to node 4), one root per row.
const SR_E8_TWICE: [[i64; 8]; 8] = [
    [1, -1, -1, -1, -1, -1, -1, 1],
    [2, 2, 0, 0, 0, 0, 0, 0],
    [-2, 2, 0, 0, 0, 0, 0, 0],
    [0, -2, 2, 0, 0, 0, 0, 0],
    [0, 0, -2, 2, 0, 0, 0, 0],
    [0, 0, 0, -2, 2, 0, 0, 0],
    [0, 0, 0, 0, -2, 2, 0, 0],
    [0, 0, 0, 0, 0, -2, 2, 0],
];

/// Dynkin adjacency of [`build_cm_e8`], 0-based.
pub const E8_DYNKIN_EDGES: [(usize, usize); 7] =
    [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)];

pub fn sr_e8_twice() -> [[i64; 8]; 8] {
    SR_E8_TWICE
}

pub fn build_sr_e8() -> ExactMatrix {
    ExactMatrix::from_fn(8, |i, j| {
        GoldenExt::from_scalar(GoldenScalar::from_rational(rat(SR_E8_TWICE[i][j], 2)))
    })
}

pub fn build_cm_e8() -> ExactMatrix {
    ExactMatrix::from_fn(8, |i, j| {
        if i == j {
            GoldenExt::integer(2)
        } else if E8_DYNKIN_EDGES.contains(&(i, j)) || E8_DYNKIN_EDGES.contains(&(j, i)) {
            GoldenExt::integer(-1)
        } else {
            GoldenExt::zero()
        }
    })
}

/// Names accepted by [`by_name`].
pub const NAMES: &[&str] = &[
    "U", "Uinv", "U_printed", "Uinv_printed", "cmU", "cmUinv", "J", "H", "Bplus", "Bminus",
    "srE8", "cmE8",
];

/// Resolve a built-in matrix by name (case-insensitive).
pub fn by_name(name: &str) -> Option<ExactMatrix> {
    let m = match name.to_ascii_lowercase().as_str() {
        "u" => build_u(),
        "uinv" | "u_inv" => build_u_inv(),
        "u_printed" => build_u_as_printed(),
        "uinv_printed" => build_u_inv_as_printed(),
        "cmu" => build_cmu(),
        "cmuinv" => build_cmu().inverse().expect("cmU is invertible"),
        "j" => build_j(),
        "h" => build_hadamard(3).expect("3 qubits").unnormalized,
        "bplus" => build_bracket_plus(),
        "bminus" => build_bracket_minus(),
        "sre8" => build_sr_e8(),
        "cme8" => build_cm_e8(),
        _ => return None,
    };
    Some(m)
}
