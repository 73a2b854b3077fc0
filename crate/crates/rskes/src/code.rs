//! Reed-Solomon code parameterization, systematic encoding, syndrome
//! computation, and errata-pattern plumbing for the test oracles.

use crate::error::{Error, Result};
use crate::gf::{Field, Gf};
use crate::poly::Poly;

/// A t-error-correcting Reed-Solomon code of block length n over GF(2^m),
/// with parity roots alpha^(b0), ..., alpha^(b0 + 2t - 1).
pub struct CodeParams {
    field: Field,
    n: usize,
    k: usize,
    t: usize,
    b0: usize,
    alpha: Gf,
    generator_poly: Poly,
}

impl CodeParams {
    /// `b0` may be any integer; it is normalized into [0, n). The block
    /// length must divide 2^m - 1 so that an n-th root of unity exists.
    pub fn new(field: Field, n: usize, t: usize, b0: i64) -> Result<CodeParams> {
        let order = field.order();
        if n == 0 || order % n != 0 {
            return Err(Error::BadBlockLength { n, order });
        }
        if t == 0 || 2 * t >= n {
            return Err(Error::BadRadius { t, n });
        }
        let alpha = field.pow(field.generator(), (order / n) as i64)?;
        let b0 = b0.rem_euclid(n as i64) as usize;
        let generator_poly = build_generator_poly(&field, alpha, n, t, b0)?;
        Ok(CodeParams {
            field,
            n,
            k: n - 2 * t,
            t,
            b0,
            alpha,
            generator_poly,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn b0(&self) -> usize {
        self.b0
    }

    /// The n-th root of unity used for parity roots and locations.
    pub fn alpha(&self) -> Gf {
        self.alpha
    }

    /// alpha^e for a signed exponent.
    pub fn alpha_pow(&self, e: i64) -> Gf {
        // alpha is nonzero, so pow cannot fail.
        self.field.pow(self.alpha, e).expect("alpha is nonzero")
    }

    /// The location alpha^pos of a codeword position.
    pub fn location(&self, pos: usize) -> Result<Gf> {
        if pos >= self.n {
            return Err(Error::PositionOutOfRange { pos, n: self.n });
        }
        Ok(self.alpha_pow(pos as i64))
    }

    /// The monic degree-2t generator polynomial
    /// g(z) = prod_{j=0}^{2t-1} (z - alpha^(b0+j)).
    pub fn generator_poly(&self) -> &Poly {
        &self.generator_poly
    }

    /// Systematic encoding: the message occupies the top k coefficients and
    /// the parity remainder the bottom 2t.
    pub fn encode(&self, message: &[Gf]) -> Result<Poly> {
        if message.len() != self.k {
            return Err(Error::MessageLength {
                expected: self.k,
                got: message.len(),
            });
        }
        for &s in message {
            self.field.check_symbol(s)?;
        }
        let shifted = Poly::from_coeffs(message.to_vec()).shift(2 * self.t);
        let (_, parity) = shifted.divmod(&self.generator_poly, &self.field)?;
        let mut coeffs = vec![Gf::ZERO; self.n];
        for i in 0..2 * self.t {
            coeffs[i] = parity.coeff(i);
        }
        coeffs[2 * self.t..].copy_from_slice(message);
        Ok(Poly::from_coeffs(coeffs))
    }

    /// The message symbols of a (corrected) codeword: its top k coefficients.
    pub fn message_of(&self, codeword: &Poly) -> Vec<Gf> {
        (2 * self.t..self.n).map(|i| codeword.coeff(i)).collect()
    }

    /// S_j = received(alpha^(b0+j)) for 0 <= j < 2t, packed as the syndrome
    /// polynomial S(z) = S_0 + S_1 z + ... + S_{2t-1} z^(2t-1).
    pub fn syndromes(&self, received: &Poly) -> Result<Poly> {
        if received.degree() >= Some(self.n) {
            return Err(Error::ReceivedTooLong(self.n));
        }
        let coeffs = (0..2 * self.t)
            .map(|j| received.eval(self.alpha_pow((self.b0 + j) as i64), &self.field))
            .collect();
        Ok(Poly::from_coeffs(coeffs))
    }

    pub fn is_codeword(&self, word: &Poly) -> Result<bool> {
        Ok(self.syndromes(word)?.is_zero())
    }

    /// XOR an errata pattern into a word.
    pub fn apply_errata(&self, word: &Poly, pattern: &ErrataPattern) -> Result<Poly> {
        pattern.validate(self)?;
        let mut coeffs: Vec<Gf> = (0..self.n).map(|i| word.coeff(i)).collect();
        for &(pos, value) in pattern.errors.iter().chain(pattern.erasures.iter()) {
            coeffs[pos] += value;
        }
        Ok(Poly::from_coeffs(coeffs))
    }

    /// The canonical errata-locator/evaluator pair of a pattern:
    /// Lambda(z) = prod (1 - X_i z) over every errata location, and
    /// Omega(z) = sum_i Y_i X_i^b0 prod_{j != i} (1 - X_j z).
    ///
    /// The pair satisfies Lambda(z)S(z) = Omega(z) mod z^2t for the
    /// pattern's syndromes, which is the identity every solver is tested
    /// against.
    pub fn reference_locator_evaluator(&self, pattern: &ErrataPattern) -> Result<(Poly, Poly)> {
        pattern.validate(self)?;
        let f = &self.field;
        let errata: Vec<(Gf, Gf)> = pattern
            .errors
            .iter()
            .chain(pattern.erasures.iter())
            .map(|&(pos, value)| Ok((self.location(pos)?, value)))
            .collect::<Result<_>>()?;

        let mut lambda = Poly::one();
        for &(x, _) in &errata {
            lambda = lambda.mul(&linear_factor(x), f);
        }

        let mut omega = Poly::zero();
        for (i, &(x_i, y_i)) in errata.iter().enumerate() {
            let mut term = Poly::from_coeffs(vec![f.mul(y_i, f.pow(x_i, self.b0 as i64)?)]);
            for (j, &(x_j, _)) in errata.iter().enumerate() {
                if j != i {
                    term = term.mul(&linear_factor(x_j), f);
                }
            }
            omega = omega.add(&term);
        }
        Ok((lambda, omega))
    }
}

/// 1 - X z, which in characteristic 2 is 1 + X z.
fn linear_factor(x: Gf) -> Poly {
    Poly::from_coeffs(vec![Gf::ONE, x])
}

fn build_generator_poly(field: &Field, alpha: Gf, n: usize, t: usize, b0: usize) -> Result<Poly> {
    let mut g = Poly::one();
    for j in 0..2 * t {
        let root = field.pow(alpha, ((b0 + j) % n) as i64)?;
        // z - root = z + root in characteristic 2.
        g = g.mul(&Poly::from_coeffs(vec![root, Gf::ONE]), field);
    }
    Ok(g)
}

/// A set of injected errors (unknown to the decoder) and erasures (positions
/// known to the decoder). Error values must be nonzero; erasure values may be
/// zero, since a marked symbol is allowed to be undamaged.
#[derive(Debug, Clone, Default)]
pub struct ErrataPattern {
    pub errors: Vec<(usize, Gf)>,
    pub erasures: Vec<(usize, Gf)>,
}

impl ErrataPattern {
    pub fn errors_only(errors: Vec<(usize, Gf)>) -> ErrataPattern {
        ErrataPattern {
            errors,
            erasures: Vec::new(),
        }
    }

    pub fn nu(&self) -> usize {
        self.errors.len()
    }

    pub fn mu(&self) -> usize {
        self.erasures.len()
    }

    /// Total errata count eta = nu + mu.
    pub fn eta(&self) -> usize {
        self.nu() + self.mu()
    }

    pub fn erasure_positions(&self) -> Vec<usize> {
        self.erasures.iter().map(|&(pos, _)| pos).collect()
    }

    pub fn validate(&self, code: &CodeParams) -> Result<()> {
        let mut seen = vec![false; code.n()];
        for &(pos, value) in self.errors.iter().chain(self.erasures.iter()) {
            if pos >= code.n() {
                return Err(Error::PositionOutOfRange { pos, n: code.n() });
            }
            if seen[pos] {
                return Err(Error::DuplicatePosition(pos));
            }
            seen[pos] = true;
            code.field().check_symbol(value)?;
        }
        for &(pos, value) in &self.errors {
            if value.is_zero() {
                return Err(Error::ZeroErrorValue(pos));
            }
        }
        Ok(())
    }
}
