//! Dense complex matrix kernel for dimensions 2 and 4.
//!
//! - tensor (Kronecker) products and partial traces over either qubit
//! - partial transposition
//! - Hermitian eigendecomposition by cyclic Jacobi rotations
//!
//! Everything here is a pure function of its inputs; matrices are plain
//! `Copy` values and can be shared freely across threads.

use num_complex::Complex64;

use crate::error::Error;

/// Hermiticity tolerance for inputs to the eigensolver: ‖M − M†‖_max.
pub const HERMITICITY_TOL: f64 = 1e-10;

/// Jacobi sweeps stop once every off-diagonal magnitude is below this.
const JACOBI_OFF_TOL: f64 = 1e-14;
const JACOBI_MAX_SWEEPS: usize = 50;

/// Which qubit of a two-qubit operator an operation refers to.
///
/// Basis ordering is |00⟩, |01⟩, |10⟩, |11⟩ with the first index qubit A,
/// so the flat index of |i_A i_B⟩ is `2*i_A + i_B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
}

/// Square complex matrix of dimension 2 or 4, row-major.
///
/// Storage is a fixed 16-slot array so values are `Copy`; only the first
/// `dim*dim` slots are meaningful.
#[derive(Clone, Copy)]
pub struct ComplexMatrix {
    dim: usize,
    data: [Complex64; 16],
}

impl ComplexMatrix {
    /// Zero matrix. `dim` must be 2 or 4.
    pub fn zeros(dim: usize) -> Self {
        assert!(dim == 2 || dim == 4, "supported dimensions are 2 and 4");
        ComplexMatrix {
            dim,
            data: [Complex64::new(0.0, 0.0); 16],
        }
    }

    /// Identity matrix of the given dimension.
    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, Complex64::new(1.0, 0.0));
        }
        m
    }

    /// Build a matrix entry-by-entry from a closure.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    /// 2×2 matrix from rows of complex entries.
    pub fn from_rows2(rows: [[Complex64; 2]; 2]) -> Self {
        Self::from_fn(2, |i, j| rows[i][j])
    }

    /// 4×4 matrix from rows of complex entries.
    pub fn from_rows4(rows: [[Complex64; 4]; 4]) -> Self {
        Self::from_fn(4, |i, j| rows[i][j])
    }

    /// 4×4 matrix from rows of real entries.
    pub fn from_real_rows4(rows: [[f64; 4]; 4]) -> Self {
        Self::from_fn(4, |i, j| Complex64::new(rows[i][j], 0.0))
    }

    /// Diagonal matrix with the given real entries (length 2 or 4).
    pub fn from_real_diag(diag: &[f64]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &x) in diag.iter().enumerate() {
            m.set(i, i, Complex64::new(x, 0.0));
        }
        m
    }

    /// Pauli σ_x.
    pub fn sigma_x() -> Self {
        let o = Complex64::new(1.0, 0.0);
        let z = Complex64::new(0.0, 0.0);
        Self::from_rows2([[z, o], [o, z]])
    }

    /// Pauli σ_y with the convention σ_y = [[0, −i], [i, 0]].
    pub fn sigma_y() -> Self {
        let z = Complex64::new(0.0, 0.0);
        Self::from_rows2([[z, Complex64::new(0.0, -1.0)], [Complex64::new(0.0, 1.0), z]])
    }

    /// Pauli σ_z.
    pub fn sigma_z() -> Self {
        let z = Complex64::new(0.0, 0.0);
        Self::from_rows2([[Complex64::new(1.0, 0.0), z], [z, Complex64::new(-1.0, 0.0)]])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.dim + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[i * self.dim + j] = v;
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).conj())
    }

    /// Entrywise complex conjugate.
    pub fn conjugate(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(i, j).conj())
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(i, j) * factor)
    }

    pub fn scale_re(&self, factor: f64) -> Self {
        self.scale(Complex64::new(factor, 0.0))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch in add");
        Self::from_fn(self.dim, |i, j| self.get(i, j) + other.get(i, j))
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch in sub");
        Self::from_fn(self.dim, |i, j| self.get(i, j) - other.get(i, j))
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch in mul");
        let n = self.dim;
        Self::from_fn(n, |i, j| (0..n).map(|k| self.get(i, k) * other.get(k, j)).sum())
    }

    /// Largest entrywise absolute difference from another matrix.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch in max_abs_diff");
        let mut m = 0.0f64;
        for i in 0..self.dim {
            for j in 0..self.dim {
                m = m.max((self.get(i, j) - other.get(i, j)).norm());
            }
        }
        m
    }

    /// ‖M − M†‖_max, the departure from Hermiticity.
    pub fn hermiticity_deviation(&self) -> f64 {
        let mut m = 0.0f64;
        for i in 0..self.dim {
            for j in 0..self.dim {
                m = m.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        m
    }

    /// Kronecker product; the result dimension `m*n` must not exceed 4.
    ///
    /// Entry layout follows the basis convention: the left factor indexes the
    /// slower (first) subsystem, `out[(i*n+k), (j*n+l)] = A[i,j] * B[k,l]`.
    pub fn tensor_product(&self, other: &Self) -> Result<Self, Error> {
        let (m, n) = (self.dim, other.dim);
        if m * n > 4 {
            return Err(Error::Dimension(format!(
                "tensor product of {m}x{m} and {n}x{n} exceeds dimension 4"
            )));
        }
        Ok(Self::from_fn(m * n, |r, c| {
            self.get(r / n, c / n) * other.get(r % n, c % n)
        }))
    }

    /// Reduced matrix after tracing out one qubit of a 4×4 operator.
    pub fn partial_trace(&self, traced_out: Subsystem) -> Result<Self, Error> {
        if self.dim != 4 {
            return Err(Error::Dimension(format!(
                "partial trace requires a 4x4 matrix, got {0}x{0}",
                self.dim
            )));
        }
        let mut out = Self::zeros(2);
        match traced_out {
            // keep A: sum the diagonals of the 2×2 B-blocks
            Subsystem::B => {
                for i in 0..2 {
                    for j in 0..2 {
                        let v = self.get(2 * i, 2 * j) + self.get(2 * i + 1, 2 * j + 1);
                        out.set(i, j, v);
                    }
                }
            }
            // keep B: sum the block-diagonal 2×2 blocks
            Subsystem::A => {
                for k in 0..2 {
                    for l in 0..2 {
                        let v = self.get(k, l) + self.get(2 + k, 2 + l);
                        out.set(k, l, v);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Partial transpose of a 4×4 operator with respect to one qubit.
    pub fn partial_transpose(&self, transposed: Subsystem) -> Result<Self, Error> {
        if self.dim != 4 {
            return Err(Error::Dimension(format!(
                "partial transpose requires a 4x4 matrix, got {0}x{0}",
                self.dim
            )));
        }
        Ok(match transposed {
            Subsystem::B => Self::from_fn(4, |r, c| {
                let (i, k) = (r / 2, r % 2);
                let (j, l) = (c / 2, c % 2);
                self.get(2 * i + l, 2 * j + k)
            }),
            Subsystem::A => Self::from_fn(4, |r, c| {
                let (i, k) = (r / 2, r % 2);
                let (j, l) = (c / 2, c % 2);
                self.get(2 * j + k, 2 * i + l)
            }),
        })
    }

    /// Eigendecomposition of a Hermitian matrix; see [`hermitian_eigen`].
    pub fn hermitian_eigen(&self) -> Result<HermitianEigenDecomposition, Error> {
        hermitian_eigen(self)
    }
}

impl PartialEq for ComplexMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && (0..self.dim * self.dim).all(|k| self.data[k] == other.data[k])
    }
}

impl std::ops::Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.dim + j]
    }
}

impl std::fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.dim, self.dim)?;
        for i in 0..self.dim {
            write!(f, "  ")?;
            for j in 0..self.dim {
                let v = self.get(i, j);
                write!(f, "{:+.6}{:+.6}i  ", v.re, v.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Eigenvalues (ascending) and orthonormal eigenvectors of a Hermitian matrix.
///
/// Satisfies `M = V diag(λ) V†` with `V` the eigenvector columns. For
/// degenerate eigenvalues the individual vectors are not unique, only the
/// spanned subspace is; consumers should rely on eigenvalues or projector
/// sums in that case.
#[derive(Debug, Clone)]
pub struct HermitianEigenDecomposition {
    eigenvalues: Vec<f64>,
    eigenvectors: ComplexMatrix,
}

impl HermitianEigenDecomposition {
    /// Eigenvalues sorted ascending.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Unitary matrix whose columns are the eigenvectors, ordered to match
    /// [`Self::eigenvalues`].
    pub fn eigenvectors(&self) -> &ComplexMatrix {
        &self.eigenvectors
    }

    /// `V diag(λ) V†`; should reproduce the source matrix.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let n = self.eigenvectors.dim();
        let v = &self.eigenvectors;
        ComplexMatrix::from_fn(n, |i, j| {
            (0..n)
                .map(|k| v.get(i, k) * self.eigenvalues[k] * v.get(j, k).conj())
                .sum()
        })
    }
}

/// Hermitian eigendecomposition by cyclic Jacobi rotations.
///
/// Sweeps complex Givens rotations over all off-diagonal pairs until the
/// largest off-diagonal magnitude drops below 1e−14 (or 50 sweeps). The
/// matrix dimensions in play (2 and 4) make this both simple and robust,
/// and the result is deterministic for identical input.
pub fn hermitian_eigen(m: &ComplexMatrix) -> Result<HermitianEigenDecomposition, Error> {
    let deviation = m.hermiticity_deviation();
    if deviation > HERMITICITY_TOL {
        return Err(Error::NotHermitian { deviation });
    }
    let n = m.dim();
    // Symmetrize away sub-tolerance asymmetry so the iteration preserves
    // Hermiticity exactly.
    let mut a = ComplexMatrix::from_fn(n, |i, j| (m.get(i, j) + m.get(j, i).conj()) * 0.5);
    let mut v = ComplexMatrix::identity(n);

    for _sweep in 0..JACOBI_MAX_SWEEPS {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in (p + 1)..n {
                off = off.max(a.get(p, q).norm());
            }
        }
        if off < JACOBI_OFF_TOL {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                jacobi_rotate(&mut a, &mut v, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a.get(i, i)
            .re
            .partial_cmp(&a.get(j, j).re)
            .unwrap()
            .then(i.cmp(&j))
    });
    let eigenvalues: Vec<f64> = order.iter().map(|&i| a.get(i, i).re).collect();
    let eigenvectors = ComplexMatrix::from_fn(n, |i, j| v.get(i, order[j]));
    Ok(HermitianEigenDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

/// One complex Jacobi rotation zeroing the (p, q) entry of the Hermitian
/// matrix `a`, accumulated into `v`.
fn jacobi_rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a.get(p, q);
    let mag = apq.norm();
    if mag == 0.0 {
        return;
    }
    let phase = apq / mag; // e^{iφ} with φ = arg(A[p,q])
    let app = a.get(p, p).re;
    let aqq = a.get(q, q).re;

    // tan(2θ) = 2|A[p,q]| / (A[p,p] − A[q,q]); pick the smaller-angle root.
    let zeta = (app - aqq) / (2.0 * mag);
    let t = if zeta >= 0.0 {
        1.0 / (zeta + (1.0 + zeta * zeta).sqrt())
    } else {
        -1.0 / (-zeta + (1.0 + zeta * zeta).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    // U differs from the identity only in rows/columns p and q:
    //   U[p,p] = c, U[p,q] = −e^{iφ} s, U[q,p] = e^{−iφ} s, U[q,q] = c.
    let n = a.dim();
    let sp = phase * s; // e^{iφ} s

    // A ← A·U
    for k in 0..n {
        let akp = a.get(k, p);
        let akq = a.get(k, q);
        a.set(k, p, akp * c + akq * sp.conj());
        a.set(k, q, akq * c - akp * sp);
    }
    // A ← U†·A
    for k in 0..n {
        let apk = a.get(p, k);
        let aqk = a.get(q, k);
        a.set(p, k, apk * c + aqk * sp);
        a.set(q, k, aqk * c - apk * sp.conj());
    }
    // Clean the rotated pair: the target entry is zero by construction and
    // the diagonal stays real.
    a.set(p, q, Complex64::new(0.0, 0.0));
    a.set(q, p, Complex64::new(0.0, 0.0));
    a.set(p, p, Complex64::new(a.get(p, p).re, 0.0));
    a.set(q, q, Complex64::new(a.get(q, q).re, 0.0));

    // V ← V·U
    for k in 0..n {
        let vkp = v.get(k, p);
        let vkq = v.get(k, q);
        v.set(k, p, vkp * c + vkq * sp.conj());
        v.set(k, q, vkq * c - vkp * sp);
    }
}
