//! Words over GF(2) and GF(3), check matrices and syndromes.
//!
//! A word of length `m` is identified with the integer whose base-`q` digits,
//! most significant first, are the entries of the word. This index is the
//! vertex label used throughout the crate and in every file format, so
//! `0121` over GF(3) is vertex `0·27 + 1·9 + 2·3 + 1 = 16`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest vertex set that is materialized explicitly by default (3^13).
pub const DEFAULT_BUDGET: u64 = 1_594_323;

const ADD3: [[u8; 3]; 3] = [[0, 1, 2], [1, 2, 0], [2, 0, 1]];
const MUL3: [[u8; 3]; 3] = [[0, 0, 0], [0, 1, 2], [0, 2, 1]];

/// Order of a prime field; only 2 and 3 are supported.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldOrder(u8);

impl FieldOrder {
    pub const GF2: FieldOrder = FieldOrder(2);
    pub const GF3: FieldOrder = FieldOrder(3);

    pub fn new(q: u32) -> Result<Self> {
        match q {
            2 => Ok(Self::GF2),
            3 => Ok(Self::GF3),
            other => Err(Error::UnsupportedField(other)),
        }
    }

    #[inline]
    pub fn get(self) -> u8 {
        self.0
    }

    #[inline]
    pub fn add(self, a: u8, b: u8) -> u8 {
        if self.0 == 2 {
            a ^ b
        } else {
            ADD3[a as usize][b as usize]
        }
    }

    #[inline]
    pub fn mul(self, a: u8, b: u8) -> u8 {
        if self.0 == 2 {
            a & b
        } else {
            MUL3[a as usize][b as usize]
        }
    }

    #[inline]
    pub fn neg(self, a: u8) -> u8 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    #[inline]
    pub fn sub(self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; in GF(2) and GF(3) every nonzero element is
    /// its own inverse.
    #[inline]
    pub fn inv(self, a: u8) -> u8 {
        assert!(a != 0, "zero has no inverse");
        a
    }

    /// Nonzero scalars 1..q.
    pub fn units(self) -> impl Iterator<Item = u8> {
        1..self.0
    }

    pub fn residue(self, value: u32) -> Result<u8> {
        if value < self.0 as u32 {
            Ok(value as u8)
        } else {
            Err(Error::ResidueOutOfRange { value, q: self.0 })
        }
    }

    /// `q^m`, or `None` when it overflows `u64`.
    pub fn pow(self, m: usize) -> Option<u64> {
        (self.0 as u64).checked_pow(m as u32)
    }
}

impl fmt::Display for FieldOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0)
    }
}

/// A vector of residues mod q.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    q: FieldOrder,
    digits: Vec<u8>,
}

impl Word {
    pub fn new(q: FieldOrder, digits: Vec<u8>) -> Result<Self> {
        if digits.is_empty() {
            return Err(Error::InvalidArgument("words have length at least 1".into()));
        }
        for &d in &digits {
            q.residue(d as u32)?;
        }
        Ok(Word { q, digits })
    }

    pub fn zero(q: FieldOrder, len: usize) -> Self {
        Word { q, digits: vec![0; len] }
    }

    /// Unit word with a 1 at position `i` (0-based).
    pub fn unit(q: FieldOrder, len: usize, i: usize) -> Self {
        let mut digits = vec![0; len];
        digits[i] = 1;
        Word { q, digits }
    }

    /// Parses a digit string such as `2211`.
    pub fn parse(q: FieldOrder, s: &str) -> Result<Self> {
        let digits = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| {
                c.to_digit(10)
                    .ok_or_else(|| Error::Parse { line: 0, message: format!("bad digit {c:?}") })
                    .and_then(|d| q.residue(d))
            })
            .collect::<Result<Vec<_>>>()?;
        Word::new(q, digits)
    }

    pub fn from_index(q: FieldOrder, len: usize, mut index: u64) -> Self {
        let base = q.get() as u64;
        let mut digits = vec![0u8; len];
        for d in digits.iter_mut().rev() {
            *d = (index % base) as u8;
            index /= base;
        }
        debug_assert_eq!(index, 0, "index exceeds q^len");
        Word { q, digits }
    }

    pub fn index(&self) -> u64 {
        let base = self.q.get() as u64;
        self.digits.iter().fold(0, |acc, &d| acc * base + d as u64)
    }

    pub fn field(&self) -> FieldOrder {
        self.q
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn is_zero(&self) -> bool {
        self.digits.iter().all(|&d| d == 0)
    }

    pub fn weight(&self) -> usize {
        self.digits.iter().filter(|&&d| d != 0).count()
    }

    fn check_compatible(&self, other: &Word) -> Result<()> {
        if self.q != other.q {
            return Err(Error::FieldMismatch { left: self.q.get(), right: other.q.get() });
        }
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch { expected: self.len(), found: other.len() });
        }
        Ok(())
    }

    /// Componentwise sum mod q.
    pub fn add(&self, other: &Word) -> Result<Word> {
        self.check_compatible(other)?;
        let q = self.q;
        let digits = self.digits.iter().zip(&other.digits).map(|(&a, &b)| q.add(a, b)).collect();
        Ok(Word { q, digits })
    }

    pub fn sub(&self, other: &Word) -> Result<Word> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Word {
        self.scale(self.q.get() - 1)
    }

    /// Multiplies every entry by `a`, taken mod q.
    pub fn scale(&self, a: u8) -> Word {
        let q = self.q;
        let a = a % q.get();
        Word { q, digits: self.digits.iter().map(|&d| q.mul(a, d)).collect() }
    }

    /// The pairing `Σ u_i v_i mod q` used by the additive characters.
    pub fn dot(&self, other: &Word) -> Result<u8> {
        self.check_compatible(other)?;
        let q = self.q;
        Ok(self.digits.iter().zip(&other.digits).fold(0, |acc, (&a, &b)| q.add(acc, q.mul(a, b))))
    }

    /// Scalar multiple whose first nonzero entry is 1 (the projective
    /// representative). The zero word is returned unchanged.
    pub fn normalized(&self) -> Word {
        match self.digits.iter().find(|&&d| d != 0) {
            Some(&lead) => self.scale(self.q.inv(lead)),
            None => self.clone(),
        }
    }

    /// True when `other = a·self` for some nonzero scalar `a`.
    pub fn is_collinear(&self, other: &Word) -> bool {
        !self.is_zero() && self.q == other.q && self.len() == other.len() && self.normalized() == other.normalized()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.digits {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// Index arithmetic on `GF(q)^m` without materializing words.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WordSpace {
    q: FieldOrder,
    len: usize,
    size: u64,
    powers: Vec<u64>,
}

impl WordSpace {
    pub fn new(q: FieldOrder, len: usize) -> Result<Self> {
        let size = q.pow(len).filter(|&s| s <= u32::MAX as u64 + 1).ok_or(Error::BudgetExceeded {
            q: q.get(),
            m: len,
            budget: u32::MAX as u64,
        })?;
        // powers[i] is the place value of digit i (digit 0 is most significant).
        let powers = (0..len).map(|i| (q.get() as u64).pow((len - 1 - i) as u32)).collect();
        Ok(WordSpace { q, len, size, powers })
    }

    pub fn with_budget(q: FieldOrder, len: usize, budget: u64) -> Result<Self> {
        match q.pow(len) {
            Some(size) if size <= budget => WordSpace::new(q, len),
            _ => Err(Error::BudgetExceeded { q: q.get(), m: len, budget }),
        }
    }

    pub fn field(&self) -> FieldOrder {
        self.q
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    /// Place value of digit `i`.
    pub fn place(&self, i: usize) -> u64 {
        self.powers[i]
    }

    #[inline]
    pub fn digit(&self, index: u64, i: usize) -> u8 {
        ((index / self.powers[i]) % self.q.get() as u64) as u8
    }

    pub fn word(&self, index: u64) -> Word {
        Word::from_index(self.q, self.len, index)
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.q.get() == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0u64;
        let mut place = 1u64;
        while a != 0 || b != 0 {
            let s = ADD3[(a % 3) as usize][(b % 3) as usize] as u64;
            out += s * place;
            place *= 3;
            a /= 3;
            b /= 3;
        }
        out
    }

    #[inline]
    pub fn scale(&self, s: u8, a: u64) -> u64 {
        match (self.q.get(), s % self.q.get()) {
            (_, 0) => 0,
            (_, 1) => a,
            (_, _) => {
                // s = 2 in GF(3): swap digits 1 and 2.
                let mut a = a;
                let mut out = 0u64;
                let mut place = 1u64;
                while a != 0 {
                    out += MUL3[2][(a % 3) as usize] as u64 * place;
                    place *= 3;
                    a /= 3;
                }
                out
            }
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        self.scale(self.q.get() - 1, a)
    }

    /// Index of the projective representative of `a` (first nonzero digit 1).
    pub fn normalize(&self, a: u64) -> u64 {
        if a == 0 || self.q.get() == 2 {
            return a;
        }
        let lead = (0..self.len).map(|i| self.digit(a, i)).find(|&d| d != 0).unwrap_or(0);
        self.scale(self.q.inv(lead), a)
    }

    pub fn words(&self) -> impl Iterator<Item = Word> + '_ {
        (0..self.size).map(move |i| self.word(i))
    }
}

/// All `q^m` words in lexicographic (= index) order.
pub fn enumerate_words(q: FieldOrder, m: usize, budget: u64) -> Result<impl Iterator<Item = Word>> {
    let space = WordSpace::with_budget(q, m, budget)?;
    Ok((0..space.size()).map(move |i| Word::from_index(q, m, i)))
}

/// A `k × n` matrix over GF(q) with nonzero, pairwise non-collinear columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CheckMatrix {
    q: FieldOrder,
    rows: Vec<Word>,
    columns: Vec<Word>,
    rank: usize,
}

impl CheckMatrix {
    pub fn from_rows(q: FieldOrder, rows: Vec<Vec<u8>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::InvalidArgument("check matrix has no rows".into()));
        }
        let rows = rows.into_iter().map(|r| Word::new(q, r)).collect::<Result<Vec<_>>>()?;
        let n = rows[0].len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: bad.len() });
        }
        let columns: Vec<Word> =
            (0..n).map(|j| Word { q, digits: rows.iter().map(|r| r.digits[j]).collect() }).collect();
        Self::validate_columns(&columns)?;
        let rank = rank(q, &rows);
        Ok(CheckMatrix { q, rows, columns, rank })
    }

    pub fn from_columns(q: FieldOrder, columns: Vec<Word>) -> Result<Self> {
        let k = columns.first().ok_or_else(|| Error::InvalidArgument("check matrix has no columns".into()))?.len();
        let rows = (0..k).map(|i| columns.iter().map(|c| c.digits[i]).collect()).collect();
        for c in &columns {
            if c.len() != k {
                return Err(Error::DimensionMismatch { expected: k, found: c.len() });
            }
            if c.field() != q {
                return Err(Error::FieldMismatch { left: q.get(), right: c.field().get() });
            }
        }
        Self::from_rows(q, rows)
    }

    /// The `k × k` identity; its syndrome graph is `H(k, q)`.
    pub fn identity(q: FieldOrder, k: usize) -> Self {
        let rows = (0..k).map(|i| (0..k).map(|j| u8::from(i == j)).collect()).collect();
        Self::from_rows(q, rows).expect("identity is a valid check matrix")
    }

    fn validate_columns(columns: &[Word]) -> Result<()> {
        let normalized: Vec<Word> = columns.iter().map(Word::normalized).collect();
        for (j, c) in columns.iter().enumerate() {
            if c.is_zero() {
                return Err(Error::ZeroColumn(j));
            }
        }
        for i in 0..normalized.len() {
            for j in i + 1..normalized.len() {
                if normalized[i] == normalized[j] {
                    return Err(Error::CollinearColumns(i, j));
                }
            }
        }
        Ok(())
    }

    /// Parses the whitespace-separated digit format. Lines starting with `#`
    /// are comments, except that a `# q=2` / `# q=3` comment selects the field
    /// (otherwise `default_q` is used).
    pub fn parse(text: &str, default_q: FieldOrder) -> Result<Self> {
        let mut q = default_q;
        let mut raw_rows = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if let Some(comment) = line.strip_prefix('#') {
                if let Some(value) = header_value(comment, "q") {
                    let value: u32 = value.parse().map_err(|_| Error::Parse {
                        line: lineno + 1,
                        message: format!("bad field order {value:?}"),
                    })?;
                    q = FieldOrder::new(value)?;
                }
                continue;
            }
            if line.is_empty() {
                continue;
            }
            let mut row = Vec::new();
            for ch in line.chars().filter(|c| !c.is_whitespace()) {
                let d = ch.to_digit(10).ok_or_else(|| Error::Parse {
                    line: lineno + 1,
                    message: format!("unexpected character {ch:?}"),
                })?;
                row.push(d);
            }
            raw_rows.push((lineno + 1, row));
        }
        let rows = raw_rows
            .into_iter()
            .map(|(line, row)| {
                row.into_iter()
                    .map(|d| q.residue(d).map_err(|e| Error::Parse { line, message: e.to_string() }))
                    .collect::<Result<Vec<u8>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(q, rows)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("# q={}\n", self.q.get());
        for r in &self.rows {
            let line: Vec<String> = r.digits.iter().map(|d| d.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn field(&self) -> FieldOrder {
        self.q
    }

    /// Number of rows (the dimension of the syndrome space).
    pub fn k(&self) -> usize {
        self.rows.len()
    }

    /// Number of columns (the code length).
    pub fn n(&self) -> usize {
        self.columns.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rows(&self) -> &[Word] {
        &self.rows
    }

    pub fn columns(&self) -> &[Word] {
        &self.columns
    }

    /// `H·x` over GF(q).
    pub fn syndrome(&self, x: &Word) -> Result<Word> {
        if x.field() != self.q {
            return Err(Error::FieldMismatch { left: self.q.get(), right: x.field().get() });
        }
        if x.len() != self.n() {
            return Err(Error::DimensionMismatch { expected: self.n(), found: x.len() });
        }
        Ok(Word { q: self.q, digits: self.syndrome_digits(x.digits()) })
    }

    pub(crate) fn syndrome_digits(&self, x: &[u8]) -> Vec<u8> {
        let q = self.q;
        self.rows.iter().map(|r| r.digits.iter().zip(x).fold(0, |acc, (&h, &v)| q.add(acc, q.mul(h, v)))).collect()
    }
}

impl fmt::Display for CheckMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

impl FromStr for CheckMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckMatrix::parse(s, FieldOrder::GF3)
    }
}

/// Extracts `value` from a `key=value` token in a header comment.
pub(crate) fn header_value<'a>(comment: &'a str, key: &str) -> Option<&'a str> {
    comment.split_whitespace().find_map(|tok| {
        let (k, v) = tok.split_once('=')?;
        (k == key).then_some(v)
    })
}

/// Rank over GF(q) by Gaussian elimination.
pub fn rank(q: FieldOrder, rows: &[Word]) -> usize {
    let mut m: Vec<Vec<u8>> = rows.iter().map(|r| r.digits.clone()).collect();
    let ncols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, p);
        let inv = q.inv(m[r][c]);
        for x in m[r].iter_mut() {
            *x = q.mul(*x, inv);
        }
        for i in 0..m.len() {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..ncols {
                    let t = q.mul(f, m[r][j]);
                    m[i][j] = q.sub(m[i][j], t);
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w3(s: &str) -> Word {
        Word::parse(FieldOrder::GF3, s).unwrap()
    }

    fn ten_eight() -> CheckMatrix {
        CheckMatrix::parse(include_str!("../fixtures/cr10_8.H"), FieldOrder::GF3).unwrap()
    }

    #[test]
    fn word_add_examples() {
        assert_eq!(w3("1012").add(&w3("0121")).unwrap(), w3("1100"));
        let b = Word::parse(FieldOrder::GF2, "101").unwrap();
        assert!(b.add(&b).unwrap().is_zero());
        assert!(w3("2211").add(&w3("1122")).unwrap().is_zero());
    }

    #[test]
    fn word_add_rejects_mismatch() {
        let b = Word::parse(FieldOrder::GF2, "1011").unwrap();
        assert!(matches!(w3("1012").add(&b), Err(Error::FieldMismatch { .. })));
        assert!(matches!(w3("1012").add(&w3("101")), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn word_scale_examples() {
        assert_eq!(w3("1012").scale(2), w3("2021"));
        assert!(w3("1012").scale(0).is_zero());
        assert_eq!(w3("1012").scale(1), w3("1012"));
    }

    #[test]
    fn syndrome_examples() {
        let h = ten_eight();
        assert!(h.syndrome(&Word::zero(FieldOrder::GF3, 7)).unwrap().is_zero());
        let e1 = Word::unit(FieldOrder::GF3, 7, 0);
        assert_eq!(h.syndrome(&e1).unwrap(), w3("1000"));
        // columns 1 and 5 are 1000 and 1100; their sum over GF(3) is 2100.
        let x = e1.add(&Word::unit(FieldOrder::GF3, 7, 4)).unwrap();
        assert_eq!(h.syndrome(&x).unwrap(), w3("2100"));
        assert!(matches!(h.syndrome(&w3("1012")), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn character_pairing_examples() {
        let v = w3("2211");
        assert_eq!(Word::zero(FieldOrder::GF3, 4).dot(&v).unwrap(), 0);
        let e = Word::unit(FieldOrder::GF3, 4, 2);
        assert_eq!(e.dot(&e).unwrap(), 1);
        // 1·2 + 0·2 + 1·1 + 2·1 = 5 ≡ 2
        assert_eq!(w3("1012").dot(&v).unwrap(), 2);
    }

    #[test]
    fn enumerate_words_examples() {
        let got: Vec<String> =
            enumerate_words(FieldOrder::GF3, 1, DEFAULT_BUDGET).unwrap().map(|w| w.to_string()).collect();
        assert_eq!(got, ["0", "1", "2"]);
        let got: Vec<String> =
            enumerate_words(FieldOrder::GF2, 2, DEFAULT_BUDGET).unwrap().map(|w| w.to_string()).collect();
        assert_eq!(got, ["00", "01", "10", "11"]);
        assert_eq!(enumerate_words(FieldOrder::GF3, 4, DEFAULT_BUDGET).unwrap().count(), 81);
        assert!(matches!(enumerate_words(FieldOrder::GF3, 14, DEFAULT_BUDGET), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn check_matrix_rejects_bad_columns() {
        let zero = CheckMatrix::from_rows(FieldOrder::GF3, vec![vec![1, 0], vec![0, 0]]);
        assert_eq!(zero, Err(Error::ZeroColumn(1)));
        let coll = CheckMatrix::from_rows(FieldOrder::GF3, vec![vec![1, 2, 0], vec![1, 2, 1]]);
        assert_eq!(coll, Err(Error::CollinearColumns(0, 1)));
        let dup = CheckMatrix::from_rows(FieldOrder::GF2, vec![vec![1, 1], vec![0, 0], vec![1, 1]]);
        assert_eq!(dup, Err(Error::CollinearColumns(0, 1)));
    }

    #[test]
    fn parse_reads_field_header_and_ignores_comments() {
        let text = "# a comment\n# q=2\n\n1 0 1\n0 1 1\n";
        let h = CheckMatrix::parse(text, FieldOrder::GF3).unwrap();
        assert_eq!(h.field(), FieldOrder::GF2);
        assert_eq!((h.k(), h.n(), h.rank()), (2, 3, 2));
        assert!(CheckMatrix::parse("1 3\n0 1\n", FieldOrder::GF3).is_err());
        assert!(CheckMatrix::parse("1 x\n", FieldOrder::GF3).is_err());
        let again = CheckMatrix::parse(&h.to_text(), FieldOrder::GF3).unwrap();
        assert_eq!(again, h);
    }

    #[test]
    fn rank_detects_dependent_rows() {
        let h = CheckMatrix::from_rows(FieldOrder::GF3, vec![vec![1, 0, 1, 1], vec![0, 1, 1, 2], vec![1, 1, 2, 0]])
            .unwrap();
        assert_eq!(h.rank(), 2);
    }

    #[test]
    fn index_space_matches_words() {
        let sp = WordSpace::new(FieldOrder::GF3, 4).unwrap();
        assert_eq!(w3("0121").index(), 16);
        for a in 0..81 {
            for b in [0u64, 1, 5, 40, 80] {
                let sum = sp.word(a).add(&sp.word(b)).unwrap();
                assert_eq!(sp.add(a, b), sum.index());
            }
            assert_eq!(sp.neg(a), sp.word(a).neg().index());
            assert_eq!(sp.normalize(a), sp.word(a).normalized().index());
        }
    }

    fn word_strategy(q: u8, len: usize) -> impl Strategy<Value = Word> {
        proptest::collection::vec(0..q, len)
            .prop_map(move |d| Word::new(FieldOrder::new(q as u32).unwrap(), d).unwrap())
    }

    proptest! {
        #[test]
        fn negation_cancels(v in word_strategy(3, 9)) {
            let q = v.field().get();
            prop_assert!(v.add(&v.scale(q - 1)).unwrap().is_zero());
        }

        #[test]
        fn syndrome_is_linear(u in word_strategy(3, 7), v in word_strategy(3, 7)) {
            let h = ten_eight();
            let lhs = h.syndrome(&u.add(&v).unwrap()).unwrap();
            let rhs = h.syndrome(&u).unwrap().add(&h.syndrome(&v).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn index_round_trip(q in 2u32..4, m in 1usize..9, seed in any::<u64>()) {
            let f = FieldOrder::new(q).unwrap();
            let index = seed % f.pow(m).unwrap();
            prop_assert_eq!(Word::from_index(f, m, index).index(), index);
        }
    }
}
