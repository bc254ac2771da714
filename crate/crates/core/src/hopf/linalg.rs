//! Dense exact-rational vectors, tensors and (bi)linear maps over a basis.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

pub type Rational = BigRational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector(Vec<Rational>);

impl Vector {
    pub fn zeros(n: usize) -> Self {
        Self(vec![Rational::zero(); n])
    }

    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = Rational::one();
        v
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        Self(coeffs)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    /// Nonzero coordinates.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.0.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    /// `self += c · v`
    pub fn add_scaled(&mut self, c: &Rational, v: &Vector) {
        for (i, x) in v.terms() {
            self.0[i] += c * x;
        }
    }

    pub fn scaled(&self, c: &Rational) -> Vector {
        Self(self.0.iter().map(|x| x * c).collect())
    }

    /// The index `i` when `self` is exactly the basis vector `e_i`.
    pub fn as_basis(&self) -> Option<usize> {
        let mut t = self.terms();
        match (t.next(), t.next()) {
            (Some((i, c)), None) if c.is_one() => Some(i),
            _ => None,
        }
    }

    /// Coefficients `p/q` with `|p| ≤ 5` and `1 ≤ q ≤ 7`.
    pub fn random(n: usize, rng: &mut impl Rng) -> Self {
        Self(
            (0..n)
                .map(|_| {
                    let p: i64 = rng.gen_range(-5..=5);
                    let q: i64 = rng.gen_range(1..=7);
                    Rational::new(BigInt::from(p), BigInt::from(q))
                })
                .collect(),
        )
    }
}

/// Coefficients of `Σ c_ij e_i ⊗ e_j`, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor2 {
    n: usize,
    data: Vec<Rational>,
}

impl Tensor2 {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![Rational::zero(); n * n],
        }
    }

    pub fn outer(x: &Vector, y: &Vector) -> Self {
        let mut t = Self::zeros(x.dim());
        for (i, a) in x.terms() {
            for (j, b) in y.terms() {
                t.data[i * t.n + j] = a * b;
            }
        }
        t
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        let n = self.n;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (k / n, k % n, c))
    }

    pub fn add_at(&mut self, i: usize, j: usize, c: &Rational) {
        self.data[i * self.n + j] += c;
    }

    pub fn add_scaled(&mut self, c: &Rational, other: &Tensor2) {
        for (i, j, x) in other.terms() {
            self.data[i * self.n + j] += c * x;
        }
    }
}

/// Coefficients of `Σ c_ijk e_i ⊗ e_j ⊗ e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor3 {
    n: usize,
    data: Vec<Rational>,
}

impl Tensor3 {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![Rational::zero(); n * n * n],
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, usize, &Rational)> {
        let n = self.n;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (k / (n * n), k / n % n, k % n, c))
    }

    pub fn add_at(&mut self, i: usize, j: usize, k: usize, c: &Rational) {
        self.data[(i * self.n + j) * self.n + k] += c;
    }
}

/// A linear map, stored by the images of the basis vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearMap {
    images: Vec<Vector>,
}

impl LinearMap {
    pub fn from_images(images: Vec<Vector>) -> Self {
        Self { images }
    }

    /// The linear extension of a map of basis indices.
    pub fn from_basis_map(f: &[usize]) -> Self {
        let n = f.len();
        Self {
            images: f.iter().map(|&i| Vector::basis(n, i)).collect(),
        }
    }

    pub fn image(&self, i: usize) -> &Vector {
        &self.images[i]
    }

    pub fn apply(&self, x: &Vector) -> Vector {
        let mut out = Vector::zeros(x.dim());
        for (i, c) in x.terms() {
            out.add_scaled(c, &self.images[i]);
        }
        out
    }

    pub fn compose(&self, inner: &LinearMap) -> LinearMap {
        LinearMap {
            images: inner.images.iter().map(|v| self.apply(v)).collect(),
        }
    }

    /// The underlying basis map, if every basis vector goes to a basis vector.
    pub fn basis_map(&self) -> Option<Vec<usize>> {
        self.images.iter().map(Vector::as_basis).collect()
    }
}

/// A bilinear map `A ⊗ A → A`, stored by the images of basis pairs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bilinear {
    n: usize,
    images: Vec<Vector>,
}

impl Bilinear {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Vector) -> Self {
        Self {
            n,
            images: (0..n * n).map(|k| f(k / n, k % n)).collect(),
        }
    }

    pub fn from_table(table: &crate::algebra::MagmaTable) -> Self {
        let n = table.size();
        Self::from_fn(n, |i, j| Vector::basis(n, table.op(i, j)))
    }

    pub fn image(&self, i: usize, j: usize) -> &Vector {
        &self.images[i * self.n + j]
    }

    pub fn apply(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::zeros(self.n);
        for (i, a) in x.terms() {
            for (j, b) in y.terms() {
                out.add_scaled(&(a * b), &self.images[i * self.n + j]);
            }
        }
        out
    }

    /// The product table on basis elements, if it closes on the basis.
    pub fn basis_table(&self) -> Option<crate::algebra::MagmaTable> {
        let entries = self.images.iter().map(Vector::as_basis).collect::<Option<Vec<_>>>()?;
        crate::algebra::MagmaTable::new(self.n, entries).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(p), BigInt::from(d))
    }

    #[test]
    fn bilinear_extension() {
        // Z/2 group algebra: (e0 + 2 e1)(e0 - e1) = e0 + e1 - 2 e0 ... computed by hand
        let t = crate::algebra::GroupTable::cyclic(2);
        let m = Bilinear::from_table(t.table());
        let x = Vector::from_coeffs(vec![q(1, 1), q(2, 1)]);
        let y = Vector::from_coeffs(vec![q(1, 1), q(-1, 1)]);
        // e0e0 - e0e1 + 2e1e0 - 2e1e1 = e0 - e1 + 2e1 - 2e0 = -e0 + e1
        assert_eq!(m.apply(&x, &y), Vector::from_coeffs(vec![q(-1, 1), q(1, 1)]));
        assert_eq!(m.basis_table().unwrap(), *t.table());
    }

    #[test]
    fn basis_detection() {
        assert_eq!(Vector::basis(3, 1).as_basis(), Some(1));
        assert_eq!(Vector::basis(3, 1).scaled(&q(1, 2)).as_basis(), None);
        let f = LinearMap::from_basis_map(&[2, 0, 1]);
        assert_eq!(f.compose(&f).basis_map(), Some(vec![1, 2, 0]));
    }

    #[test]
    fn random_vectors_are_reproducible() {
        let a = Vector::random(4, &mut ChaCha8Rng::seed_from_u64(7));
        let b = Vector::random(4, &mut ChaCha8Rng::seed_from_u64(7));
        assert_eq!(a, b);
    }
}
