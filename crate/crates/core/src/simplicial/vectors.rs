use std::fmt;

use serde::{Deserialize, Serialize};

use super::Complex;

/// `(f_{-1}, f_0, …, f_{d-1})`; empty for the void complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceVector(pub Vec<u64>);

/// `(h_0, …, h_d)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HVector(pub Vec<i64>);

/// `(g_0, …, g_{⌊d/2⌋})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GVector(pub Vec<i64>);

fn tuple<T: fmt::Display>(f: &mut fmt::Formatter<'_>, xs: &[T]) -> fmt::Result {
    let parts: Vec<String> = xs.iter().map(ToString::to_string).collect();
    write!(f, "({})", parts.join(","))
}

impl fmt::Display for FaceVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        tuple(f, &self.0)
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        tuple(f, &self.0)
    }
}

impl fmt::Display for GVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        tuple(f, &self.0)
    }
}

pub fn f_vector(c: &Complex) -> FaceVector {
    FaceVector(c.faces_by_size().iter().map(|fs| fs.len() as u64).collect())
}

fn binomial(n: i128, k: i128) -> i128 {
    if k < 0 || n < k {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1i128, |acc, i| acc * (n - i) / (i + 1))
}

/// `h_k = Σ_{i≤k} (-1)^{k-i} C(d-i, k-i) f_{i-1}` for `k = 0..=d`.
pub fn h_vector(f: &FaceVector, d: usize) -> HVector {
    let d = d as i128;
    let h = (0..=d)
        .map(|k| {
            (0..=k)
                .map(|i| {
                    let fi = f.0.get(i as usize).copied().unwrap_or(0) as i128;
                    let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
                    sign * binomial(d - i, k - i) * fi
                })
                .sum::<i128>() as i64
        })
        .collect();
    HVector(h)
}

/// First differences of `h` up to the middle degree.
pub fn g_vector(h: &HVector) -> GVector {
    let d = h.0.len().saturating_sub(1);
    let g = (0..=d / 2)
        .filter_map(|k| {
            let hk = *h.0.get(k)?;
            Some(if k == 0 { hk } else { hk - h.0[k - 1] })
        })
        .collect();
    GVector(g)
}

/// Macaulay's pseudo-power `a^{<i>}` (for `i ≥ 1`): the largest possible value of the
/// next entry of an M-sequence whose `i`-th entry is `a`.
pub fn macaulay_bound(a: u64, i: u32) -> u128 {
    assert!(i >= 1, "pseudo-powers are defined for i >= 1");
    let mut rest = a as i128;
    let mut total: i128 = 0;
    let mut t = i as i128;
    while rest > 0 && t >= 1 {
        // largest n with C(n, t) <= rest
        let mut n = t;
        while binomial(n + 1, t) <= rest {
            n += 1;
        }
        rest -= binomial(n, t);
        total += binomial(n + 1, t + 1);
        t -= 1;
    }
    total as u128
}

/// `g_0 = 1`, nonnegative entries, and Macaulay growth `g_{i+1} ≤ g_i^{<i>}`.
pub fn is_m_sequence(g: &GVector) -> bool {
    let Some(&g0) = g.0.first() else { return false };
    if g0 != 1 || g.0.iter().any(|&x| x < 0) {
        return false;
    }
    g.0.windows(2)
        .enumerate()
        .skip(1)
        .all(|(i, w)| (w[1] as u128) <= macaulay_bound(w[0] as u64, i as u32))
}

/// `h_k = h_{d-k}` for all `k`.
pub fn dehn_sommerville_check(h: &HVector) -> bool {
    h.0.iter().eq(h.0.iter().rev())
}
