//! Minimal polynomial arithmetic over the rationals, just enough for the
//! factorization-free Jordan decomposition: gcd, derivative, squarefree part,
//! evaluation at a matrix, rational root extraction.

use crate::matrix::Matrix;
use crate::rational::Rational;
use num::bigint::BigInt;
use num::traits::{One, Signed, Zero};

/// Coefficients in ascending degree; normalized so the leading entry is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly(pub Vec<Rational>);

impl Poly {
    pub fn from_coeffs(mut c: Vec<Rational>) -> Poly {
        while c.len() > 1 && c.last().unwrap().is_zero() {
            c.pop();
        }
        Poly(c)
    }

    pub fn zero() -> Poly {
        Poly(vec![Rational::zero()])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }

    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }

    pub fn leading(&self) -> &Rational {
        self.0.last().unwrap()
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = Rational::one() / self.leading();
        Poly(self.0.iter().map(|c| c * &inv).collect())
    }

    pub fn derivative(&self) -> Poly {
        if self.0.len() == 1 {
            return Poly::zero();
        }
        let c = self
            .0
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, x)| x * Rational::from_integer(BigInt::from(i)))
            .collect();
        Poly::from_coeffs(c)
    }

    pub fn divmod(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut rem = self.0.clone();
        let dd = d.degree();
        if self.degree() < dd || self.is_zero() {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); self.degree() - dd + 1];
        let lead_inv = Rational::one() / d.leading();
        for i in (dd..rem.len()).rev() {
            let f = &rem[i] * &lead_inv;
            if f.is_zero() {
                continue;
            }
            quot[i - dd] = f.clone();
            for (j, dc) in d.0.iter().enumerate() {
                let idx = i - dd + j;
                rem[idx] = &rem[idx] - &f * dc;
            }
        }
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divmod(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// p / gcd(p, p'): same roots, all simple.
    pub fn squarefree_part(&self) -> Poly {
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            return self.monic();
        }
        self.divmod(&g).0.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == 0
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        assert!(m.is_square());
        let n = m.rows;
        let mut acc = Matrix::zero(n, n);
        for c in self.0.iter().rev() {
            acc = acc.mul(m);
            for i in 0..n {
                let v = acc.get(i, i) + c;
                acc.set(i, i, v);
            }
        }
        acc
    }

    /// All rational roots, found exactly by scanning divisors of the cleared
    /// leading/constant coefficients.
    pub fn rational_roots(&self) -> Vec<Rational> {
        if self.is_zero() {
            return Vec::new();
        }
        // clear denominators to an integer polynomial
        let mut den = BigInt::one();
        for c in &self.0 {
            den = num::integer::lcm(den, c.denom().clone());
        }
        let ints: Vec<BigInt> = self
            .0
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let mut low = 0;
        while ints[low].is_zero() {
            low += 1;
        }
        let mut roots = Vec::new();
        if low > 0 {
            roots.push(Rational::zero());
        }
        let a0 = ints[low].abs();
        let an = ints.last().unwrap().abs();
        let ps = divisors(&a0);
        let qs = divisors(&an);
        for p in &ps {
            for q in &qs {
                for sign in [1i32, -1] {
                    let cand = Rational::new(p * BigInt::from(sign), q.clone());
                    if self.eval(&cand).is_zero() && !roots.contains(&cand) {
                        roots.push(cand.clone());
                    }
                }
            }
        }
        roots
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    // trial division; the polynomials here are tiny
    let mut out = Vec::new();
    let mut d = BigInt::one();
    let limit = n.sqrt();
    while d <= limit {
        if (n % &d).is_zero() {
            out.push(d.clone());
            let q = n / &d;
            if q != d {
                out.push(q);
            }
        }
        d += 1;
    }
    if out.is_empty() && !n.is_zero() {
        out.push(n.clone());
    }
    out
}

/// Minimal polynomial of a square matrix via Krylov-style dependency search
/// on the vectorized powers I, M, M^2, ...
pub fn minimal_polynomial(m: &Matrix) -> Poly {
    assert!(m.is_square());
    let n = m.rows;
    if n == 0 {
        return Poly::from_coeffs(vec![Rational::one()]);
    }
    let mut powers: Vec<Matrix> = vec![Matrix::identity(n)];
    loop {
        let k = powers.len();
        // solve sum c_i M^i = M^k over the previous powers
        let cols: Vec<Vec<Rational>> = powers.iter().map(|p| p.vectorize()).collect();
        let a = Matrix::from_cols(cols);
        let next = powers.last().unwrap().mul(m);
        if let Some(c) = a.solve_vec(&next.vectorize()) {
            // M^k - sum c_i M^i = 0
            let mut coeffs: Vec<Rational> = c.into_iter().map(|x| -x).collect();
            coeffs.push(Rational::one());
            return Poly::from_coeffs(coeffs);
        }
        powers.push(next);
        assert!(k <= n, "minimal polynomial degree exceeded dimension");
    }
}
