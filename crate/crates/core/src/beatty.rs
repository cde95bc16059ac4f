//! Generalized Beatty sequences `V(p, q, r)` with `alpha = phi`, the
//! Fibonacci word and the small morphism calculus around them.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{floor_phi, scalar, Scalar};
use crate::error::{precondition, Result};

/// Index origin: `V` starts at `n = 1`, `V0` also includes `n = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Origin {
    One,
    Zero,
}

impl Origin {
    pub fn first_index(self) -> u64 {
        match self {
            Origin::One => 1,
            Origin::Zero => 0,
        }
    }
}

/// `n -> p floor(n phi) + q n + r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GbsParams<T> {
    pub p: T,
    pub q: T,
    pub r: T,
    pub origin: Origin,
}

impl<T: Scalar> GbsParams<T> {
    pub fn new(p: T, q: T, r: T) -> Self {
        GbsParams {
            p,
            q,
            r,
            origin: Origin::One,
        }
    }

    pub fn new0(p: T, q: T, r: T) -> Self {
        GbsParams {
            p,
            q,
            r,
            origin: Origin::Zero,
        }
    }

    pub fn with_origin(mut self, origin: Origin) -> Self {
        self.origin = origin;
        self
    }

    pub fn with_offset(&self, r: T) -> Self {
        GbsParams { r, ..self.clone() }
    }

    pub fn term(&self, n: &T) -> T {
        self.p.clone() * floor_phi(n) + self.q.clone() * n.clone() + self.r.clone()
    }

    /// The two letters `(2p + q, p + q)` of the difference word.
    pub fn letters(&self) -> (T, T) {
        let two = scalar::<T>(2);
        (
            two * self.p.clone() + self.q.clone(),
            self.p.clone() + self.q.clone(),
        )
    }

    /// Strictly increasing iff both difference letters are positive.
    pub fn is_increasing(&self) -> bool {
        let (a, b) = self.letters();
        a.is_positive() && b.is_positive()
    }

    /// `VA`, valid for the `n >= 1` origin.
    pub fn compose_a(&self) -> Result<Self> {
        self.require_origin_one("compose_a")?;
        Ok(GbsParams::new(
            self.p.clone() + self.q.clone(),
            self.p.clone(),
            self.r.clone() - self.p.clone(),
        ))
    }

    /// `VB`, valid for the `n >= 1` origin.
    pub fn compose_b(&self) -> Result<Self> {
        self.require_origin_one("compose_b")?;
        let (a, b) = self.letters();
        Ok(GbsParams::new(a, b, self.r.clone()))
    }

    fn require_origin_one(&self, op: &str) -> Result<()> {
        if self.origin != Origin::One {
            return precondition(format!("{op} needs the n >= 1 origin"));
        }
        Ok(())
    }
}

impl GbsParams<i64> {
    pub fn term_at(&self, n: u64) -> i64 {
        self.term(&(n as i64))
    }

    /// All terms `<= bound`; the sequence must be increasing.
    pub fn terms_up_to(&self, bound: i64) -> Result<Vec<i64>> {
        if !self.is_increasing() {
            return precondition(format!("{self} is not increasing"));
        }
        let mut out = Vec::new();
        let mut n = self.origin.first_index();
        loop {
            let v = self.term_at(n);
            if v > bound {
                return Ok(out);
            }
            out.push(v);
            n += 1;
        }
    }
}

impl<T: Scalar> fmt::Display for GbsParams<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.origin {
            Origin::One => "V",
            Origin::Zero => "V0",
        };
        write!(f, "{name}({},{},{})", self.p, self.q, self.r)
    }
}

/// First `count` terms from the declared origin.
pub fn gbs_terms<T: Scalar>(params: &GbsParams<T>, count: usize) -> Vec<T> {
    let start = params.origin.first_index();
    (0..count as u64)
        .map(|k| params.term(&crate::arith::scalar_u64(start + k)))
        .collect()
}

/// Lower Wythoff `A(n) = floor(n phi)`.
pub fn wythoff_a(n: u64) -> u64 {
    floor_phi(&(n as i64)) as u64
}

/// Upper Wythoff `B(n) = floor(n phi) + n`.
pub fn wythoff_b(n: u64) -> u64 {
    wythoff_a(n) + n
}

/// Prefix of the fixed point of `a -> ab, b -> a` over the letters `a`, `b`.
pub fn fibonacci_word<L: Clone>(a: L, b: L, length: usize) -> Vec<L> {
    // true stands for letter a
    let mut w = vec![true];
    while w.len() < length {
        w = w
            .iter()
            .flat_map(|&x| if x { vec![true, false] } else { vec![true] })
            .collect();
    }
    w.truncate(length);
    w.into_iter()
        .map(|x| if x { a.clone() } else { b.clone() })
        .collect()
}

pub fn differences<T: Scalar>(seq: &[T]) -> Vec<T> {
    seq.windows(2)
        .map(|p| p[1].clone() - p[0].clone())
        .collect()
}

/// Distinct values of a difference word, in order of first appearance.
fn two_letters<T: Scalar>(d: &[T]) -> Option<(T, T)> {
    let first = d.first()?.clone();
    let other = d.iter().find(|x| **x != first)?.clone();
    if d.iter().any(|x| *x != first && *x != other) {
        return None;
    }
    Some((first, other))
}

/// Recovers `V(a - b, 2b - a, r)` when the differences form a prefix of
/// `x_{a,b}`. Needs at least 8 terms and certifies only the prefix.
pub fn gbs_recognize<T: Scalar>(seq: &[T]) -> Option<GbsParams<T>> {
    if seq.len() < 8 {
        return None;
    }
    let d = differences(seq);
    let (a, b) = two_letters(&d)?;
    if fibonacci_word(a.clone(), b.clone(), d.len()) != d {
        return None;
    }
    let p = a.clone() - b.clone();
    let q = scalar::<T>(2) * b - a;
    let r = seq[0].clone() - p.clone() - q.clone();
    Some(GbsParams::new(p, q, r))
}

/// Letter-to-word table over `char`; serves `{a, b}` and `{3, 4, 5}` alike.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    name: String,
    rules: BTreeMap<char, String>,
}

impl Morphism {
    pub fn new(name: &str, rules: &[(char, &str)]) -> Result<Self> {
        let mut map = BTreeMap::new();
        for &(c, img) in rules {
            if img.is_empty() {
                return precondition(format!("morphism {name}: empty image for {c}"));
            }
            map.insert(c, img.to_string());
        }
        Ok(Morphism {
            name: name.to_string(),
            rules: map,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// `a -> aba, b -> ab`
    pub fn f() -> Self {
        Morphism::new("f", &[('a', "aba"), ('b', "ab")]).unwrap()
    }

    /// `a -> baa, b -> ba`
    pub fn g() -> Self {
        Morphism::new("g", &[('a', "baa"), ('b', "ba")]).unwrap()
    }

    /// `a -> aab, b -> ab`
    pub fn h() -> Self {
        Morphism::new("h", &[('a', "aab"), ('b', "ab")]).unwrap()
    }

    /// `3 -> 5, 4 -> 434, 5 -> 545`
    pub fn kappa() -> Self {
        Morphism::new("kappa", &[('3', "5"), ('4', "434"), ('5', "545")]).unwrap()
    }

    /// `a -> 54, b -> 34`
    pub fn delta() -> Self {
        Morphism::new("delta", &[('a', "54"), ('b', "34")]).unwrap()
    }

    pub fn apply(&self, word: &str) -> Result<String> {
        let mut out = String::new();
        for c in word.chars() {
            match self.rules.get(&c) {
                Some(img) => out.push_str(img),
                None => {
                    return precondition(format!("morphism {} has no image for {c:?}", self.name))
                }
            }
        }
        Ok(out)
    }

    /// `m^k(word)`.
    pub fn iterate(&self, word: &str, k: usize) -> Result<String> {
        let mut w = word.to_string();
        for _ in 0..k {
            w = self.apply(&w)?;
        }
        Ok(w)
    }

    /// `self o other`: apply `other` first.
    pub fn compose(&self, other: &Morphism) -> Result<Morphism> {
        let mut rules = BTreeMap::new();
        for (c, img) in &other.rules {
            rules.insert(*c, self.apply(img)?);
        }
        Ok(Morphism {
            name: format!("{}{}", self.name, other.name),
            rules,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DiffTag {
    #[serde(rename = "X_F")]
    XF,
    #[serde(rename = "X_G")]
    XG,
    #[serde(rename = "X_H")]
    XH,
    #[serde(rename = "NONE")]
    None,
}

impl fmt::Display for DiffTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DiffTag::XF => "X_F",
            DiffTag::XG => "X_G",
            DiffTag::XH => "X_H",
            DiffTag::None => "NONE",
        };
        f.write_str(s)
    }
}

/// Classification of a difference word; `a` and `b` are the letters of the
/// underlying Fibonacci word `x_{a,b}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiffWordClass {
    pub tag: DiffTag,
    pub a: i64,
    pub b: i64,
}

impl DiffWordClass {
    pub fn none() -> Self {
        DiffWordClass {
            tag: DiffTag::None,
            a: 0,
            b: 0,
        }
    }
}

impl fmt::Display for DiffWordClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.tag {
            DiffTag::None => write!(f, "NONE"),
            tag => write!(f, "{tag}({},{})", self.a, self.b),
        }
    }
}

fn expected_word(tag: DiffTag, a: i64, b: i64, len: usize) -> Vec<i64> {
    match tag {
        DiffTag::XF => fibonacci_word(a, b, len),
        DiffTag::XG | DiffTag::XH => {
            let lead = if tag == DiffTag::XG { b } else { a };
            let mut w = vec![lead];
            w.extend(fibonacci_word(a, b, len.saturating_sub(1)));
            w.truncate(len);
            w
        }
        DiffTag::None => Vec::new(),
    }
}

/// Every class whose word has `Delta seq` as a prefix, in the order
/// `X_F`, `X_G`, `X_H`.
pub fn classify_all(seq: &[i64]) -> Vec<DiffWordClass> {
    if seq.len() < 8 {
        return Vec::new();
    }
    let d = differences(seq);
    let Some((u, v)) = two_letters(&d) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for tag in [DiffTag::XF, DiffTag::XG, DiffTag::XH] {
        for (a, b) in [(u, v), (v, u)] {
            if expected_word(tag, a, b, d.len()) == d {
                out.push(DiffWordClass { tag, a, b });
            }
        }
    }
    out
}

/// First match of [`classify_all`], or `NONE`.
pub fn classify_difference_word(seq: &[i64]) -> DiffWordClass {
    classify_all(seq)
        .into_iter()
        .next()
        .unwrap_or_else(DiffWordClass::none)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn terms_examples() {
        assert_eq!(gbs_terms(&GbsParams::new(3i64, 1, 1), 3), [5, 12, 16]);
        assert_eq!(gbs_terms(&GbsParams::new(1i64, 0, 0), 5), [1, 3, 4, 6, 8]);
        assert_eq!(gbs_terms(&GbsParams::new(1i64, 2, -1), 3), [2, 6, 9]);
        assert_eq!(gbs_terms(&GbsParams::new0(1i64, 2, 1), 4), [1, 4, 8, 11]);
    }

    #[test]
    fn composition_examples() {
        let v = GbsParams::new(1i64, 2, -1);
        assert_eq!(v.compose_a().unwrap(), GbsParams::new(3, 1, -2));
        assert_eq!(v.compose_b().unwrap(), GbsParams::new(4, 3, -1));
        let b = GbsParams::new(1i64, 0, 0).compose_b().unwrap();
        assert_eq!(gbs_terms(&b, 5), [3, 8, 11, 16, 21]);
        let ab: Vec<i64> = (1..=5).map(|n| wythoff_a(wythoff_b(n)) as i64).collect();
        assert_eq!(gbs_terms(&b, 5), ab);
        assert!(GbsParams::new0(1i64, 0, 0).compose_a().is_err());
    }

    #[test]
    fn fibonacci_word_prefix() {
        assert_eq!(
            fibonacci_word('a', 'b', 6).iter().collect::<String>(),
            "abaaba"
        );
        assert_eq!(fibonacci_word('a', 'b', 1), ['a']);
        let d = differences(&gbs_terms(&GbsParams::new(1i64, 2, -1), 6));
        assert_eq!(d, [4, 3, 4, 4, 3]);
    }

    #[test]
    fn recognition() {
        let v = GbsParams::new(3i64, 1, 2);
        assert_eq!(gbs_recognize(&gbs_terms(&v, 12)), Some(v));
        let arithmetic: Vec<i64> = (1..=12).map(|k| 5 * k).collect();
        assert_eq!(gbs_recognize(&arithmetic), None);
        assert_eq!(gbs_recognize(&[1i64, 2, 3]), None);
    }

    #[test]
    fn morphism_examples() {
        let kappa = Morphism::kappa();
        assert_eq!(kappa.iterate("4", 2).unwrap(), "4345434");
        assert_eq!(Morphism::delta().apply("b").unwrap(), "34");
        let hb = Morphism::h().apply("b").unwrap();
        assert_eq!(Morphism::delta().apply(&hb).unwrap(), "5434");
        assert!(kappa.apply("ab").is_err());
    }

    #[test]
    fn commutation_relation() {
        let lhs = Morphism::kappa().compose(&Morphism::delta()).unwrap();
        let rhs = Morphism::delta().compose(&Morphism::h()).unwrap();
        for c in ["a", "b", "abaab"] {
            assert_eq!(lhs.apply(c).unwrap(), rhs.apply(c).unwrap());
        }
    }

    #[test]
    fn f_is_the_square_of_the_fibonacci_morphism() {
        let w = Morphism::f().iterate("a", 4).unwrap();
        let x: String = fibonacci_word('a', 'b', w.len()).into_iter().collect();
        assert_eq!(w, x);
    }

    #[test]
    fn classification() {
        let v = gbs_terms(&GbsParams::new(3i64, 1, 1), 40);
        assert_eq!(
            classify_difference_word(&v),
            DiffWordClass {
                tag: DiffTag::XF,
                a: 7,
                b: 4
            }
        );
        let mut g = vec![0i64];
        for x in expected_word(DiffTag::XG, 29, 18, 30) {
            g.push(g.last().unwrap() + x);
        }
        let c = classify_difference_word(&g);
        assert_eq!((c.tag, c.a, c.b), (DiffTag::XG, 29, 18));
        let constant: Vec<i64> = (0..10).collect();
        assert_eq!(classify_difference_word(&constant).tag, DiffTag::None);
    }
}
