//! Bit-class combinatorics over qubit indices.
//!
//! Qubits are indexed 0..2^n-1 and viewed in binary, bit 0 being the least
//! significant. Two families of index classes drive the test plans:
//!
//! * bit classes `(i,b)`: all indices whose i-th bit equals b;
//! * equality classes `[i,=]` / `[i,!=]`: all indices whose bits at positions
//!   i-1 and i are equal / unequal.
//!
//! A faulty coupling shares its endpoints' common bits with every bit class
//! that contains it, so the set of failing class tests (the syndrome) pins
//! those bits. Bit-complementary pairs escape every bit class and are told
//! apart by the equality classes instead.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Qubit index inside the padded 0..2^n register.
pub type QubitIndex = u32;

/// Unordered pair of distinct qubits, stored with the smaller index first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coupling {
    a: QubitIndex,
    b: QubitIndex,
}

impl Coupling {
    /// Canonicalizes the pair; panics on a self-coupling.
    pub fn new(a: QubitIndex, b: QubitIndex) -> Self {
        assert!(a != b, "coupling endpoints must differ");
        Coupling {
            a: a.min(b),
            b: a.max(b),
        }
    }

    pub fn a(&self) -> QubitIndex {
        self.a
    }

    pub fn b(&self) -> QubitIndex {
        self.b
    }

    pub fn contains(&self, q: QubitIndex) -> bool {
        self.a == q || self.b == q
    }

    /// True when the endpoints differ in every one of the n bits.
    pub fn is_complementary(&self, n: u32) -> bool {
        self.a ^ self.b == mask(n)
    }
}

impl fmt::Display for Coupling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.a, self.b)
    }
}

impl Serialize for Coupling {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        (self.a, self.b).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Coupling {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let (a, b) = <(u32, u32)>::deserialize(d)?;
        if a == b {
            return Err(D::Error::custom("coupling endpoints must differ"));
        }
        Ok(Coupling::new(a, b))
    }
}

/// Label of a test class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ClassLabel {
    /// `(i,b)`: indices whose bit `position` equals `value`.
    Bit { position: u32, value: u8 },
    /// `[i,=]` or `[i,!=]`: indices whose bits at `position-1` and `position`
    /// are equal (`equal == true`) or unequal.
    Eq { position: u32, equal: bool },
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassLabel::Bit { position, value } => write!(f, "({position},{value})"),
            ClassLabel::Eq { position, equal } => {
                write!(f, "[{},{}]", position, if *equal { "=" } else { "!=" })
            }
        }
    }
}

/// Set of failing stage-1 class tests, with the bit pattern they pin down.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Syndrome {
    /// Failing `(i,b)` labels as (position, value) pairs.
    pub failing: Vec<(u32, u8)>,
    /// Bit position -> pinned value, derived from `failing`.
    pub fixed_bits: BTreeMap<u32, u8>,
    /// True when both `(i,0)` and `(i,1)` failed for some position i.
    pub conflict: bool,
}

impl Syndrome {
    /// Builds a syndrome from failing bit-class labels.
    pub fn from_failing(labels: impl IntoIterator<Item = (u32, u8)>) -> Self {
        let mut failing: Vec<(u32, u8)> = labels.into_iter().collect();
        failing.sort_unstable();
        failing.dedup();
        let mut fixed_bits = BTreeMap::new();
        let mut conflict = false;
        for &(i, b) in &failing {
            if let Some(&prev) = fixed_bits.get(&i) {
                if prev != b {
                    conflict = true;
                }
            }
            fixed_bits.insert(i, b);
        }
        Syndrome {
            failing,
            fixed_bits,
            conflict,
        }
    }

    /// Number of pinned bit positions (the syndrome length L).
    pub fn len(&self) -> usize {
        self.fixed_bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fixed_bits.is_empty()
    }

    /// Bit positions not pinned by the syndrome, ascending.
    pub fn free_bits(&self, n: u32) -> Vec<u32> {
        (0..n).filter(|p| !self.fixed_bits.contains_key(p)).collect()
    }
}

/// Signature of a bit-complementary pair: XORs of consecutive bits of either
/// endpoint. Bit j-1 of `bits` holds bit(j-1) XOR bit(j), for 0 < j < n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PairSignature {
    pub bits: u32,
    pub len: u32,
}

impl fmt::Display for PairSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in (0..self.len).rev() {
            write!(f, "{}", (self.bits >> j) & 1)?;
        }
        write!(f, "b")
    }
}

fn mask(n: u32) -> u32 {
    (1u32 << n) - 1
}

/// Rounds a physical qubit count up to a power of two.
///
/// Returns the exponent n and the virtual (padding) indices in `[N, 2^n)`.
/// Virtual qubits never appear in generated test sets.
pub fn pad_to_power_of_two(qubits: usize) -> Result<(u32, Vec<QubitIndex>)> {
    if qubits < 2 {
        return Err(Error::InvalidDevice(qubits));
    }
    let n = (usize::BITS - (qubits - 1).leading_zeros()).max(1);
    let padded = 1usize << n;
    Ok((n, (qubits as u32..padded as u32).collect()))
}

/// Members of a class, ascending.
pub fn class_members(n: u32, label: ClassLabel) -> Result<Vec<QubitIndex>> {
    let valid = match label {
        ClassLabel::Bit { position, .. } => position < n,
        ClassLabel::Eq { position, .. } => position > 0 && position < n,
    };
    if !valid {
        let position = match label {
            ClassLabel::Bit { position, .. } | ClassLabel::Eq { position, .. } => position,
        };
        return Err(Error::InvalidLabel { position, n });
    }
    let members = (0..1u32 << n)
        .filter(|&x| match label {
            ClassLabel::Bit { position, value } => (x >> position) & 1 == value as u32,
            ClassLabel::Eq { position, equal } => {
                (((x >> (position - 1)) ^ (x >> position)) & 1 == 0) == equal
            }
        })
        .collect();
    Ok(members)
}

/// All bit classes `(i,b)` containing both endpoints of `c`.
///
/// Empty exactly when the endpoints are bit-complementary; never longer than
/// n-1, and never contains both values of one position.
pub fn classes_containing_pair(n: u32, c: Coupling) -> Vec<(u32, u8)> {
    (0..n)
        .filter(|&i| (c.a() >> i) & 1 == (c.b() >> i) & 1)
        .map(|i| (i, ((c.a() >> i) & 1) as u8))
        .collect()
}

/// Signature of a bit-complementary pair; injective over such pairs.
pub fn pair_signature(n: u32, c: Coupling) -> Result<PairSignature> {
    if !c.is_complementary(n) {
        return Err(Error::NotComplementary(c, n));
    }
    let x = c.a();
    let mut bits = 0u32;
    for j in 1..n {
        if ((x >> (j - 1)) ^ (x >> j)) & 1 == 1 {
            bits |= 1 << (j - 1);
        }
    }
    Ok(PairSignature { bits, len: n - 1 })
}

/// All couplings that would produce syndrome `s`: pairs agreeing with the
/// pinned bits and complementary in the free bits. There are `2^(n-L-1)`.
pub fn candidates_from_syndrome(n: u32, s: &Syndrome) -> Result<Vec<Coupling>> {
    if s.conflict {
        let position = s
            .failing
            .iter()
            .find(|(i, _)| s.failing.contains(&(*i, 1)) && s.failing.contains(&(*i, 0)))
            .map(|(i, _)| *i)
            .unwrap_or(0);
        return Err(Error::MultiFault(position));
    }
    let free = s.free_bits(n);
    let mut base = 0u32;
    for (&i, &b) in &s.fixed_bits {
        base |= (b as u32) << i;
    }
    let free_mask: u32 = free.iter().map(|&p| 1u32 << p).sum();
    let mut out = Vec::new();
    for assign in 0..1u32 << free.len() {
        let mut x = base;
        for (j, &p) in free.iter().enumerate() {
            x |= ((assign >> j) & 1) << p;
        }
        let partner = x ^ free_mask;
        if x < partner {
            out.push(Coupling::new(x, partner));
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// A restricted equality class over a set of free bit positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictedEqClass {
    /// 1-based index j of the class over the renumbered free bits.
    pub index: usize,
    /// The two free positions whose equality the class expresses.
    pub lower: u32,
    pub upper: u32,
    /// Member indices, ascending, consistent with the fixed bits.
    pub members: Vec<QubitIndex>,
}

/// Equality classes `[j,=]` adapted to the given free bits.
///
/// Class j (1-based) contains every index whose bits at `free_bits[j-1]` and
/// `free_bits[j]` are equal, restricted to indices matching `fixed_bits`.
/// Fewer than two free bits mean the candidate is already unique; the result
/// is then empty.
pub fn restricted_eq_classes(
    n: u32,
    free_bits: &[u32],
    fixed_bits: &BTreeMap<u32, u8>,
) -> Result<Vec<RestrictedEqClass>> {
    for &p in free_bits {
        if p >= n {
            return Err(Error::InvalidLabel { position: p, n });
        }
    }
    let mut out = Vec::new();
    for j in 1..free_bits.len() {
        let (lo, hi) = (free_bits[j - 1], free_bits[j]);
        let members = (0..1u32 << n)
            .filter(|&x| {
                fixed_bits.iter().all(|(&p, &v)| (x >> p) & 1 == v as u32)
                    && (x >> lo) & 1 == (x >> hi) & 1
            })
            .collect();
        out.push(RestrictedEqClass {
            index: j,
            lower: lo,
            upper: hi,
            members,
        });
    }
    Ok(out)
}

/// Membership test for `[i,=]` via the Gray code: bit i-1 of x XOR (x >> 1)
/// is zero exactly when bits i-1 and i of x are equal.
pub fn gray_code_check(n: u32, i: u32, x: QubitIndex) -> bool {
    debug_assert!(i > 0 && i < n);
    (x ^ (x >> 1)) >> (i - 1) & 1 == 0
}

/// Reconstructs the unique bit-complementary-in-the-free-bits pair from a
/// syndrome plus equality observations over consecutive free bits.
///
/// `equal[j-1]` says whether the pair's bits at `free[j-1]` and `free[j]` are
/// equal. The endpoint whose highest free bit is 0 anchors the XOR chain; the
/// partner is its free-bit complement.
pub fn pair_from_equalities(n: u32, s: &Syndrome, equal: &[bool]) -> Result<Coupling> {
    let free = s.free_bits(n);
    if free.is_empty() {
        return Err(Error::DecodeFailure);
    }
    debug_assert_eq!(equal.len(), free.len() - 1);
    let mut bits = vec![0u8; n as usize];
    for (&p, &v) in &s.fixed_bits {
        bits[p as usize] = v;
    }
    bits[*free.last().unwrap() as usize] = 0;
    for j in (1..free.len()).rev() {
        let xor = u8::from(!equal[j - 1]);
        bits[free[j - 1] as usize] = bits[free[j] as usize] ^ xor;
    }
    let x: u32 = bits
        .iter()
        .enumerate()
        .map(|(p, &v)| (v as u32) << p)
        .sum();
    let free_mask: u32 = free.iter().map(|&p| 1u32 << p).sum();
    Ok(Coupling::new(x, x ^ free_mask))
}

/// Every coupling on `qubits` real qubits, canonical order.
pub fn all_couplings(qubits: usize) -> Vec<Coupling> {
    let mut out = Vec::with_capacity(qubits * (qubits - 1) / 2);
    for a in 0..qubits as u32 {
        for b in a + 1..qubits as u32 {
            out.push(Coupling::new(a, b));
        }
    }
    out
}
