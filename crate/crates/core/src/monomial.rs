//! Monomial ideals of the weighted plane ring `T = k[x2, x3]` and their
//! Hilbert-Burch resolutions.
//!
//! Everything here is combinatorics on exponent pairs and shares no code
//! with the Groebner kernel.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MonomialError {
    #[error("the ideal has no generators")]
    Empty,
    #[error("I_n is indexed from 1")]
    ZeroIndex,
    #[error("ideals live in differently weighted rings")]
    WeightMismatch,
}

/// A monomial ideal of `k[x2, x3]`; the pair `(a, b)` stands for `x2^a x3^b`.
///
/// Generators are kept minimal and sorted by decreasing `a`, so `b` is
/// strictly increasing along the list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal2 {
    gens: Vec<(u32, u32)>,
    d2: u32,
    d3: u32,
}

/// Drops every exponent pair divisible by another and sorts the rest by
/// decreasing `x2`-exponent.
pub fn minimize(mut gens: Vec<(u32, u32)>) -> Vec<(u32, u32)> {
    // Increasing a, then increasing b: a pair survives iff its b is below
    // every b kept so far.
    gens.sort_unstable();
    gens.dedup();
    let mut out: Vec<(u32, u32)> = Vec::with_capacity(gens.len());
    let mut best_b = u32::MAX;
    for (a, b) in gens {
        if b < best_b {
            out.push((a, b));
            best_b = b;
        }
    }
    out.reverse();
    out
}

impl MonomialIdeal2 {
    pub fn new(gens: Vec<(u32, u32)>, d2: u32, d3: u32) -> Self {
        MonomialIdeal2 {
            gens: minimize(gens),
            d2,
            d3,
        }
    }

    /// The whole ring, generated by `1`.
    pub fn unit(d2: u32, d3: u32) -> Self {
        MonomialIdeal2::new(vec![(0, 0)], d2, d3)
    }

    pub fn generators(&self) -> &[(u32, u32)] {
        &self.gens
    }

    pub fn weights(&self) -> (u32, u32) {
        (self.d2, self.d3)
    }

    pub fn degree(&self, (a, b): (u32, u32)) -> u64 {
        u64::from(a) * u64::from(self.d2) + u64::from(b) * u64::from(self.d3)
    }

    pub fn contains(&self, (a, b): (u32, u32)) -> bool {
        self.gens.iter().any(|&(x, y)| x <= a && y <= b)
    }

    fn check(&self, other: &MonomialIdeal2) -> Result<(), MonomialError> {
        if (self.d2, self.d3) != (other.d2, other.d3) {
            return Err(MonomialError::WeightMismatch);
        }
        Ok(())
    }

    pub fn sum(&self, other: &MonomialIdeal2) -> Result<MonomialIdeal2, MonomialError> {
        self.check(other)?;
        let gens = self.gens.iter().chain(&other.gens).copied().collect();
        Ok(MonomialIdeal2::new(gens, self.d2, self.d3))
    }

    pub fn product(&self, other: &MonomialIdeal2) -> Result<MonomialIdeal2, MonomialError> {
        self.check(other)?;
        let gens = self
            .gens
            .iter()
            .flat_map(|&(a, b)| other.gens.iter().map(move |&(c, d)| (a + c, b + d)))
            .collect();
        Ok(MonomialIdeal2::new(gens, self.d2, self.d3))
    }

    pub fn power(&self, n: u32) -> MonomialIdeal2 {
        let mut acc = MonomialIdeal2::unit(self.d2, self.d3);
        for _ in 0..n {
            acc = acc.product(self).expect("same weights");
        }
        acc
    }

    /// `(I : x2^a x3^b)`, by exponent subtraction.
    pub fn colon(&self, (a, b): (u32, u32)) -> MonomialIdeal2 {
        let gens = self
            .gens
            .iter()
            .map(|&(x, y)| (x.saturating_sub(a), y.saturating_sub(b)))
            .collect();
        MonomialIdeal2::new(gens, self.d2, self.d3)
    }

    /// Minimal graded free resolution `0 -> F2 -> F1 -> T`.
    pub fn hilbert_burch(&self) -> Result<HBResolution, MonomialError> {
        if self.gens.is_empty() {
            return Err(MonomialError::Empty);
        }
        let generator_degrees = self.gens.iter().map(|&g| self.degree(g)).collect();
        // Consecutive generators (a_i, b_i), (a_{i+1}, b_{i+1}) with
        // a_i > a_{i+1} and b_i < b_{i+1} meet in x2^{a_i} x3^{b_{i+1}}.
        let syzygy_degrees = self
            .gens
            .windows(2)
            .map(|w| self.degree((w[0].0, w[1].1)))
            .collect();
        Ok(HBResolution {
            generator_degrees,
            syzygy_degrees,
        })
    }

    /// Castelnuovo-Mumford regularity of `T / I`.
    pub fn regularity_quotient(&self) -> Result<i64, MonomialError> {
        Ok(self.hilbert_burch()?.regularity())
    }

    /// `dim_k (T/I)_k` for `k = 0..=max_degree`, by enumerating monomials.
    pub fn hilbert_function(&self, max_degree: u64) -> Vec<u64> {
        let mut h = vec![0u64; max_degree as usize + 1];
        let (d2, d3) = (u64::from(self.d2), u64::from(self.d3));
        let mut a = 0u64;
        while a * d2 <= max_degree {
            let mut b = 0u64;
            while a * d2 + b * d3 <= max_degree {
                if !self.contains((a as u32, b as u32)) {
                    h[(a * d2 + b * d3) as usize] += 1;
                }
                b += 1;
            }
            a += 1;
        }
        h
    }
}

/// Degree data of the resolution of `T/I` for a monomial ideal `I` of `T`:
/// generators sit in homological position 1, syzygies in position 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HBResolution {
    pub generator_degrees: Vec<u64>,
    pub syzygy_degrees: Vec<u64>,
}

impl HBResolution {
    /// `max(shift - position)` over the resolution of `T/I`.
    pub fn regularity(&self) -> i64 {
        let gens = self.generator_degrees.iter().map(|&d| d as i64 - 1);
        let syz = self.syzygy_degrees.iter().map(|&d| d as i64 - 2);
        gens.chain(syz).chain(std::iter::once(0)).max().unwrap_or(0)
    }

    /// First `len` coefficients of the Hilbert series of `T/I`, read off the
    /// resolution: `(1 - sum t^g + sum t^s) / ((1 - t^d2)(1 - t^d3))`.
    pub fn hilbert_series(&self, d2: u32, d3: u32, len: usize) -> Vec<i64> {
        let mut num = vec![0i64; len];
        let mut bump = |deg: u64, v: i64| {
            if (deg as usize) < len {
                num[deg as usize] += v;
            }
        };
        bump(0, 1);
        for &g in &self.generator_degrees {
            bump(g, -1);
        }
        for &s in &self.syzygy_degrees {
            bump(s, 1);
        }
        // Multiply by 1 / (1 - t^w) for each weight, i.e. prefix sums with
        // stride w.
        for w in [d2 as usize, d3 as usize] {
            for k in w..len {
                num[k] += num[k - w];
            }
        }
        num
    }
}

/// `I_n = sum over a1 + 2 a2 = n of J1^a1 J2^a2` with
/// `J1 = (x2^2, x2 x3^q, x3^(q+1))` and `J2 = (x3^(2q+1))`.
pub fn build_in(q: u32, m: u32, n: u32) -> Result<MonomialIdeal2, MonomialError> {
    if n == 0 {
        return Err(MonomialError::ZeroIndex);
    }
    let (d2, d3) = (2 * q + 1 + m, 2 * q + 1 + 2 * m);
    let j1 = j1(q, m);
    let j2 = MonomialIdeal2::new(vec![(0, 2 * q + 1)], d2, d3);
    let mut gens = Vec::new();
    for a2 in 0..=n / 2 {
        let a1 = n - 2 * a2;
        let term = j1.power(a1).product(&j2.power(a2))?;
        gens.extend_from_slice(term.generators());
    }
    Ok(MonomialIdeal2::new(gens, d2, d3))
}

/// `J1 = (x2^2, x2 x3^q, x3^(q+1))`, which is also `I_1`.
pub fn j1(q: u32, m: u32) -> MonomialIdeal2 {
    let (d2, d3) = (2 * q + 1 + m, 2 * q + 1 + 2 * m);
    MonomialIdeal2::new(vec![(2, 0), (1, q), (0, q + 1)], d2, d3)
}
