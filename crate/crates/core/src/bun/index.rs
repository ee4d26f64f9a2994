use std::fmt;

/// `m = (m_0, ..., m_{n-1})` with `Σ m_i = nl - d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BIndex(Vec<u64>);

/// `I = (i_1, ..., i_{nl-d})` with entries in `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ITuple(Vec<u32>);

impl BIndex {
    pub fn new(parts: Vec<u64>) -> Self {
        BIndex(parts)
    }

    pub fn parts(&self) -> &[u64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// `Σ m_i`.
    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    /// `Σ i m_i`.
    pub fn twist(&self) -> u64 {
        self.0.iter().enumerate().map(|(i, m)| i as u64 * m).sum()
    }
}

impl fmt::Display for BIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl ITuple {
    pub fn new(entries: Vec<u32>) -> Self {
        ITuple(entries)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|I| = Σ i_j`.
    pub fn weight(&self) -> u64 {
        self.0.iter().map(|&i| u64::from(i)).sum()
    }

    /// All tuples of the given length with entries in `0..n`, in lexicographic order.
    pub fn all(n: u32, len: usize) -> Vec<ITuple> {
        let mut out = vec![ITuple(Vec::with_capacity(len))];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|t| {
                    (0..n).map(move |i| {
                        let mut v = t.0.clone();
                        v.push(i);
                        ITuple(v)
                    })
                })
                .collect();
        }
        out
    }
}

/// `B = { m ∈ N^n : Σ m_i = total }`, with `m_0` decreasing fastest first.
pub fn b_index_set(n: u32, total: u64) -> Vec<BIndex> {
    fn go(n: usize, total: u64, prefix: &mut Vec<u64>, out: &mut Vec<BIndex>) {
        if prefix.len() + 1 == n {
            prefix.push(total);
            out.push(BIndex(prefix.clone()));
            prefix.pop();
            return;
        }
        for first in (0..=total).rev() {
            prefix.push(first);
            go(n, total - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n as usize, total, &mut Vec::new(), &mut out);
    }
    out
}

/// The only target `m + (n, 0, ..., 0)` of a nonzero transition map out of the summand `m`.
pub fn transition_support(m: &BIndex, n: u32) -> BIndex {
    let mut parts = m.0.clone();
    if let Some(first) = parts.first_mut() {
        *first += u64::from(n);
    }
    BIndex(parts)
}

/// `τ(I)_r = #{ j : i_j = r }` and `h(I) = (0, ..., 0, I)` with `n` leading zeros.
pub fn tuple_maps(tuple: &ITuple, n: u32) -> (BIndex, ITuple) {
    let mut tau = vec![0u64; n as usize];
    for &i in &tuple.0 {
        tau[i as usize] += 1;
    }
    let mut h = vec![0u32; n as usize];
    h.extend_from_slice(&tuple.0);
    (BIndex(tau), ITuple(h))
}
