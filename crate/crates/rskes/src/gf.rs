//! Arithmetic in GF(2^m), 2 <= m <= 16.
//!
//! A [`Field`] owns log/antilog tables built at construction, so a multiply
//! is two lookups and an add. Construction validates its parameters by
//! checking that the generator's powers enumerate every nonzero element
//! exactly once; that single check rejects both reducible reduction
//! polynomials and non-primitive generators.

use std::fmt;

use crate::error::{Error, Result};

/// A field element, stored as the bit pattern of its polynomial
/// representation. The value is always below 2^m for the field it is used
/// with; range checks happen at the I/O boundary, not per operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Gf(pub u16);

impl Gf {
    pub const ZERO: Gf = Gf(0);
    pub const ONE: Gf = Gf(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Addition in characteristic 2 is XOR, independent of m; subtraction is the
/// same operation.
impl std::ops::Add for Gf {
    type Output = Gf;
    #[inline]
    fn add(self, rhs: Gf) -> Gf {
        Gf(self.0 ^ rhs.0)
    }
}

impl std::ops::AddAssign for Gf {
    #[inline]
    fn add_assign(&mut self, rhs: Gf) {
        self.0 ^= rhs.0;
    }
}

impl fmt::LowerHex for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::LowerHex::fmt(&self.0, f)
    }
}

/// Default reduction polynomials, indexed by m. Each is primitive, so the
/// element `z` (value 2) generates the multiplicative group.
const DEFAULT_POLYS: [(u32, u32); 15] = [
    (2, 0x7),      // z^2 + z + 1
    (3, 0xB),      // z^3 + z + 1
    (4, 0x13),     // z^4 + z + 1
    (5, 0x25),     // z^5 + z^2 + 1
    (6, 0x43),     // z^6 + z + 1
    (7, 0x89),     // z^7 + z^3 + 1
    (8, 0x11D),    // z^8 + z^4 + z^3 + z^2 + 1
    (9, 0x211),    // z^9 + z^4 + 1
    (10, 0x409),   // z^10 + z^3 + 1
    (11, 0x805),   // z^11 + z^2 + 1
    (12, 0x1053),  // z^12 + z^6 + z^4 + z + 1
    (13, 0x201B),  // z^13 + z^4 + z^3 + z + 1
    (14, 0x4443),  // z^14 + z^10 + z^6 + z + 1
    (15, 0x8003),  // z^15 + z + 1
    (16, 0x1100B), // z^16 + z^12 + z^3 + z + 1
];

/// The default reduction polynomial for extension degree `m`.
pub fn default_reduction_poly(m: u32) -> Result<u32> {
    DEFAULT_POLYS
        .iter()
        .find(|(deg, _)| *deg == m)
        .map(|(_, p)| *p)
        .ok_or(Error::NoDefaultPoly(m))
}

/// GF(2^m) with table-backed arithmetic. Immutable after construction and
/// safe to share across threads.
pub struct Field {
    m: u32,
    reduction_poly: u32,
    generator: Gf,
    /// 2^m - 1, the order of the multiplicative group.
    order: usize,
    /// exp[i] = generator^i, doubled so `exp[log a + log b]` needs no modulo.
    exp: Vec<u16>,
    /// log[a] = i with exp[i] = a, for a != 0. Slot 0 is unused.
    log: Vec<u16>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("m", &self.m)
            .field("reduction_poly", &format_args!("{:#x}", self.reduction_poly))
            .field("generator", &self.generator)
            .finish()
    }
}

/// Carry-less multiply of `a` and `b` followed by reduction modulo `poly`
/// (degree m). Only used while building the tables.
fn clmul_reduce(a: u32, b: u32, poly: u32, m: u32) -> u32 {
    let mut acc = 0u32;
    for i in 0..m {
        if b & (1 << i) != 0 {
            acc ^= a << i;
        }
    }
    for bit in (m..2 * m).rev() {
        if acc & (1 << bit) != 0 {
            acc ^= poly << (bit - m);
        }
    }
    acc
}

impl Field {
    /// Build GF(2^m) from a degree-m reduction polynomial (bit i = the
    /// coefficient of z^i) and a generator element.
    pub fn new(m: u32, reduction_poly: u32, generator: u16) -> Result<Field> {
        if !(2..=16).contains(&m) {
            return Err(Error::BadExtensionDegree(m));
        }
        let size = 1usize << m;
        if reduction_poly & 1 == 0
            || reduction_poly & (1 << m) == 0
            || reduction_poly >> m != 1
        {
            return Err(Error::BadReductionPoly(reduction_poly));
        }
        if generator == 0 || generator as usize >= size {
            return Err(Error::SymbolRange(generator));
        }

        let order = size - 1;
        let mut exp = vec![0u16; 2 * order];
        // u16::MAX doubles as the "not seen yet" marker; valid logs stop at
        // order - 1 <= 65534.
        let mut log = vec![u16::MAX; size];

        let mut x = 1u32;
        for i in 0..order {
            if x == 0 || log[x as usize] != u16::MAX {
                // Hit zero or revisited an element before covering the whole
                // group: reducible polynomial or non-primitive generator.
                return Err(Error::NotPrimitive {
                    poly: reduction_poly,
                    generator,
                });
            }
            exp[i] = x as u16;
            log[x as usize] = i as u16;
            x = clmul_reduce(x, generator as u32, reduction_poly, m);
        }
        if x != 1 {
            return Err(Error::NotPrimitive {
                poly: reduction_poly,
                generator,
            });
        }
        for i in order..2 * order {
            exp[i] = exp[i - order];
        }

        Ok(Field {
            m,
            reduction_poly,
            generator: Gf(generator),
            order,
            exp,
            log,
        })
    }

    /// Build GF(2^m) with the default reduction polynomial and generator 2.
    pub fn with_default_poly(m: u32) -> Result<Field> {
        Field::new(m, default_reduction_poly(m)?, 2)
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn reduction_poly(&self) -> u32 {
        self.reduction_poly
    }

    pub fn generator(&self) -> Gf {
        self.generator
    }

    /// Number of elements, 2^m.
    pub fn size(&self) -> usize {
        self.order + 1
    }

    /// Order of the multiplicative group, 2^m - 1.
    pub fn order(&self) -> usize {
        self.order
    }

    /// True when `a` is a valid element of this field.
    pub fn contains(&self, a: Gf) -> bool {
        (a.0 as usize) < self.size()
    }

    pub fn check_symbol(&self, a: Gf) -> Result<Gf> {
        if self.contains(a) {
            Ok(a)
        } else {
            Err(Error::SymbolRange(a.0))
        }
    }

    /// All field elements, 0 first.
    pub fn elements(&self) -> impl Iterator<Item = Gf> + '_ {
        (0..self.size() as u32).map(|v| Gf(v as u16))
    }

    #[inline]
    pub fn add(&self, a: Gf, b: Gf) -> Gf {
        a + b
    }

    #[inline]
    pub fn mul(&self, a: Gf, b: Gf) -> Gf {
        if a.is_zero() || b.is_zero() {
            Gf::ZERO
        } else {
            let idx = self.log[a.0 as usize] as usize + self.log[b.0 as usize] as usize;
            Gf(self.exp[idx])
        }
    }

    pub fn inv(&self, a: Gf) -> Result<Gf> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(Gf(self.exp[self.order - self.log[a.0 as usize] as usize]))
    }

    pub fn div(&self, a: Gf, b: Gf) -> Result<Gf> {
        if b.is_zero() {
            return Err(Error::ZeroInverse);
        }
        if a.is_zero() {
            return Ok(Gf::ZERO);
        }
        let idx = self.log[a.0 as usize] as usize + self.order
            - self.log[b.0 as usize] as usize;
        Ok(Gf(self.exp[idx]))
    }

    /// `a` raised to a signed exponent. `pow(a, 0) = 1` for every `a`;
    /// negative exponents go through the inverse, so they reject `a = 0`.
    pub fn pow(&self, a: Gf, e: i64) -> Result<Gf> {
        if e == 0 {
            return Ok(Gf::ONE);
        }
        if a.is_zero() {
            return if e < 0 {
                Err(Error::ZeroToNegativePower)
            } else {
                Ok(Gf::ZERO)
            };
        }
        let order = self.order as i64;
        let e_red = e.rem_euclid(order) as usize;
        let idx = self.log[a.0 as usize] as usize * e_red % self.order;
        Ok(Gf(self.exp[idx]))
    }
}
