//! Dense polynomials over GF(2^m), coefficients stored in ascending powers.
//!
//! The coefficient vector may carry trailing zeros; they are never
//! semantically meaningful. Equality compares up to trailing zeros and
//! [`Poly::degree`] reports the highest nonzero index, with `None` standing
//! for the degree of the zero polynomial (below every integer, which is
//! exactly how `Option<usize>` orders).

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{Field, Gf};

#[derive(Clone, Default)]
pub struct Poly {
    coeffs: Vec<Gf>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly {
            coeffs: vec![Gf::ONE],
        }
    }

    /// The monomial z^k.
    pub fn monomial(k: usize) -> Poly {
        let mut coeffs = vec![Gf::ZERO; k + 1];
        coeffs[k] = Gf::ONE;
        Poly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<Gf>) -> Poly {
        Poly { coeffs }
    }

    /// Convenience for literals in tests and docs.
    pub fn from_values(values: &[u16]) -> Poly {
        Poly {
            coeffs: values.iter().map(|&v| Gf(v)).collect(),
        }
    }

    /// Raw coefficient slice, trailing zeros included.
    pub fn coeffs(&self) -> &[Gf] {
        &self.coeffs
    }

    /// Coefficient of z^i (zero beyond the stored length).
    #[inline]
    pub fn coeff(&self, i: usize) -> Gf {
        self.coeffs.get(i).copied().unwrap_or(Gf::ZERO)
    }

    /// Highest nonzero index; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.degree().is_none()
    }

    /// Leading (highest-degree) coefficient; zero for the zero polynomial.
    pub fn leading(&self) -> Gf {
        match self.degree() {
            Some(d) => self.coeffs[d],
            None => Gf::ZERO,
        }
    }

    /// Copy without trailing zeros.
    pub fn trimmed(&self) -> Poly {
        let len = self.degree().map_or(0, |d| d + 1);
        Poly {
            coeffs: self.coeffs[..len].to_vec(),
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Poly { coeffs }
    }

    pub fn scale(&self, c: Gf, field: &Field) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|&a| field.mul(a, c)).collect(),
        }
    }

    /// Horner evaluation at `x`.
    pub fn eval(&self, x: Gf, field: &Field) -> Gf {
        let mut acc = Gf::ZERO;
        for &c in self.coeffs.iter().rev() {
            acc = field.mul(acc, x) + c;
        }
        acc
    }

    /// Schoolbook product.
    pub fn mul(&self, other: &Poly, field: &Field) -> Poly {
        let (da, db) = match (self.degree(), other.degree()) {
            (Some(da), Some(db)) => (da, db),
            _ => return Poly::zero(),
        };
        let mut coeffs = vec![Gf::ZERO; da + db + 1];
        for i in 0..=da {
            let a = self.coeffs[i];
            if a.is_zero() {
                continue;
            }
            for j in 0..=db {
                coeffs[i + j] += field.mul(a, other.coeffs[j]);
            }
        }
        Poly { coeffs }
    }

    /// Long division: returns (quotient, remainder) with
    /// `self = q * den + r` and `deg r < deg den`.
    pub fn divmod(&self, den: &Poly, field: &Field) -> Result<(Poly, Poly)> {
        let dd = den.degree().ok_or(Error::ZeroPolyDivisor)?;
        let lead_inv = field.inv(den.coeffs[dd])?;
        let mut rem = self.trimmed();
        let dn = match rem.degree() {
            Some(dn) if dn >= dd => dn,
            _ => return Ok((Poly::zero(), rem)),
        };
        let mut quot = vec![Gf::ZERO; dn - dd + 1];
        for i in (dd..=dn).rev() {
            let c = rem.coeff(i);
            if c.is_zero() {
                continue;
            }
            let q = field.mul(c, lead_inv);
            quot[i - dd] = q;
            for j in 0..=dd {
                let t = field.mul(q, den.coeffs[j]);
                rem.coeffs[i - dd + j] += t;
            }
        }
        Ok((Poly { coeffs: quot }, rem))
    }

    /// Truncate to the coefficients of z^0 .. z^(k-1).
    pub fn mod_xk(&self, k: usize) -> Poly {
        let len = self.coeffs.len().min(k);
        Poly {
            coeffs: self.coeffs[..len].to_vec(),
        }
    }

    /// Formal derivative in characteristic 2: coefficient i of the result is
    /// coefficient i+1 of the input when i is even, and zero when i is odd.
    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let coeffs = (0..self.coeffs.len() - 1)
            .map(|i| {
                if i % 2 == 0 {
                    self.coeffs[i + 1]
                } else {
                    Gf::ZERO
                }
            })
            .collect();
        Poly { coeffs }
    }

    /// Multiply by z^k.
    pub fn shift(&self, k: usize) -> Poly {
        if self.coeffs.is_empty() {
            return Poly::zero();
        }
        let mut coeffs = vec![Gf::ZERO; k + self.coeffs.len()];
        coeffs[k..].copy_from_slice(&self.coeffs);
        Poly { coeffs }
    }

    /// Space-separated lowercase hex coefficients, ascending powers. This is
    /// the wire format used by frame files and trace rows.
    pub fn render_hex(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let parts: Vec<String> = self.coeffs.iter().map(|c| format!("{c:x}")).collect();
        parts.join(" ")
    }
}

/// Equality up to trailing zeros.
impl PartialEq for Poly {
    fn eq(&self, other: &Poly) -> bool {
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len).all(|i| self.coeff(i) == other.coeff(i))
    }
}

impl Eq for Poly {}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]", self.render_hex())
    }
}
