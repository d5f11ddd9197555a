//! Linear algebra over GF(2) on vectors of at most 64 coordinates, packed in
//! a `u64` with coordinate `i` in bit `i`.

/// Row-echelon basis indexed by pivot bit (the highest set bit of each row).
#[derive(Debug, Clone)]
pub struct EchelonBasis {
    rows: [u64; 64],
    present: u64,
}

impl Default for EchelonBasis {
    fn default() -> Self {
        Self { rows: [0; 64], present: 0 }
    }
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_vectors<I: IntoIterator<Item = u64>>(vecs: I) -> Self {
        let mut b = Self::new();
        for v in vecs {
            b.insert(v);
        }
        b
    }

    /// Reduces `v` against the basis: clears every pivot bit.
    pub fn reduce(&self, mut v: u64) -> u64 {
        let mut pivots = self.present;
        while pivots != 0 {
            let pivot = 63 - pivots.leading_zeros();
            pivots ^= 1 << pivot;
            if (v >> pivot) & 1 == 1 {
                v ^= self.rows[pivot as usize];
            }
        }
        v
    }

    /// Adds `v`; returns whether it was independent of the current rows.
    pub fn insert(&mut self, v: u64) -> bool {
        let r = self.reduce(v);
        if r == 0 {
            return false;
        }
        let pivot = 63 - r.leading_zeros();
        self.rows[pivot as usize] = r;
        self.present |= 1 << pivot;
        true
    }

    pub fn contains(&self, v: u64) -> bool {
        self.reduce(v) == 0
    }

    pub fn rank(&self) -> usize {
        self.present.count_ones() as usize
    }

    pub fn rows(&self) -> Vec<u64> {
        (0..64).filter(|i| (self.present >> i) & 1 == 1).map(|i| self.rows[i]).collect()
    }

    /// Every element of the span, in Gray-code order starting at zero.
    pub fn span(&self) -> Vec<u64> {
        span_of(&self.rows())
    }
}

/// All `2^k` combinations of `basis` (assumed independent), Gray-code order.
pub fn span_of(basis: &[u64]) -> Vec<u64> {
    let k = basis.len();
    let mut out = Vec::with_capacity(1 << k);
    let mut acc = 0u64;
    out.push(acc);
    for i in 1u64..(1 << k) {
        acc ^= basis[i.trailing_zeros() as usize];
        out.push(acc);
    }
    out
}

pub fn rank<I: IntoIterator<Item = u64>>(vecs: I) -> usize {
    EchelonBasis::from_vectors(vecs).rank()
}

#[inline]
pub fn dot(a: u64, b: u64) -> bool {
    (a & b).count_ones() & 1 == 1
}

/// Basis of `{h ∈ F_2^n : h·v = 0 for every v in vecs}`.
pub fn dual_basis(vecs: &[u64], n: usize) -> Vec<u64> {
    // reduced row echelon form with pivots chosen at the lowest set bit
    let mut rows: Vec<u64> = Vec::new();
    for &v in vecs {
        let mut r = v;
        for &row in &rows {
            let pivot = row.trailing_zeros();
            if (r >> pivot) & 1 == 1 {
                r ^= row;
            }
        }
        if r != 0 {
            let pivot = r.trailing_zeros();
            for row in rows.iter_mut() {
                if (*row >> pivot) & 1 == 1 {
                    *row ^= r;
                }
            }
            rows.push(r);
        }
    }
    let pivots: u64 = rows.iter().fold(0, |acc, r| acc | (1 << r.trailing_zeros()));
    let mut out = Vec::new();
    for free in 0..n {
        if (pivots >> free) & 1 == 1 {
            continue;
        }
        let mut h = 1u64 << free;
        for row in &rows {
            if (row >> free) & 1 == 1 {
                h |= 1 << row.trailing_zeros();
            }
        }
        out.push(h);
    }
    out
}

/// `dim(A ∩ B)` for subspaces given by spanning sets.
pub fn intersection_dim(a: &[u64], b: &[u64]) -> usize {
    let ra = rank(a.iter().copied());
    let rb = rank(b.iter().copied());
    let rab = rank(a.iter().chain(b).copied());
    ra + rb - rab
}

#[inline]
pub fn mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}
