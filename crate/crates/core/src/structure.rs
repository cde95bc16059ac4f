//! Lucas intervals, the recursive construction of expansions, canonical
//! splittings into translated copies of `Lambda_3`, `Lambda_4`, `Lambda_5`,
//! block congruences and the propagation harness.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{lucas, scalar, Scalar};
use crate::beatty::Morphism;
use crate::error::{precondition, Error, Result};
use crate::numeration::{DigitWord, PhiExpansion};
use crate::table::{central_bits, CentralPattern, ExpansionTable};

/// Closed range `[start, end]`; empty when `start > end`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LucasInterval<T> {
    pub index: usize,
    pub start: T,
    pub end: T,
}

impl<T: Scalar> LucasInterval<T> {
    pub fn contains(&self, n: &T) -> bool {
        &self.start <= n && n <= &self.end
    }

    pub fn len(&self) -> T {
        if self.start > self.end {
            T::zero()
        } else {
            self.end.clone() - self.start.clone() + T::one()
        }
    }

    pub fn is_empty(&self) -> bool {
        self.start > self.end
    }
}

impl LucasInterval<i64> {
    pub fn span(&self) -> Span {
        Span::new(self.start as u64, self.end as u64)
    }
}

impl<T: Scalar> fmt::Display for LucasInterval<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.start, self.end)
    }
}

/// Plain inclusive range of naturals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Span {
    pub start: u64,
    pub end: u64,
}

impl Span {
    pub fn new(start: u64, end: u64) -> Self {
        Span { start, end }
    }

    pub fn len(&self) -> u64 {
        (self.end + 1).saturating_sub(self.start)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> {
        self.start..=self.end
    }

    pub fn shifted(&self, by: u64) -> Span {
        Span::new(self.start + by, self.end + by)
    }
}

/// `Lambda_{2n} = [L_{2n}, L_{2n+1}]`, `Lambda_{2n+1} = [L_{2n+1} + 1, L_{2n+2} - 1]`.
/// `Lambda_0` comes out empty, which lets the smallest recursion steps
/// reference it.
pub fn lambda_interval<T: Scalar>(m: usize) -> LucasInterval<T> {
    let (start, end) = if m.is_multiple_of(2) {
        (lucas::<T>(m), lucas::<T>(m + 1))
    } else {
        (lucas::<T>(m) + T::one(), lucas::<T>(m + 1) - T::one())
    };
    LucasInterval {
        index: m,
        start,
        end,
    }
}

/// `Xi_n = Lambda_{2n-1} u Lambda_{2n} = [L_{2n-1} + 1, L_{2n+1}]`.
pub fn xi_interval<T: Scalar>(n: usize) -> Result<LucasInterval<T>> {
    if n == 0 {
        return precondition("Xi_n needs n >= 1");
    }
    Ok(LucasInterval {
        index: n,
        start: lucas::<T>(2 * n - 1) + T::one(),
        end: lucas::<T>(2 * n + 1),
    })
}

/// The `m` with `N` in `Lambda_m`.
pub fn locate<T: Scalar>(n: &T) -> Result<usize> {
    if n < &scalar::<T>(2) {
        return precondition(format!("locate needs N >= 2, got {n}"));
    }
    let mut m = 1;
    while lambda_interval::<T>(m).end < *n {
        m += 1;
    }
    Ok(m)
}

/// Closed-form expansions at the borders of `Lambda_{2n}` and `Lambda_{2n+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BorderExpansions {
    /// `beta(L_{2n}) = 10^{2n} . 0^{2n-1}1`
    pub even_start: PhiExpansion,
    /// `beta(L_{2n+1}) = 1(01)^n . (01)^n`
    pub even_end: PhiExpansion,
    /// `beta(L_{2n+1} + 1) = 10^{2n+1} . (10)^n 01`
    pub odd_start: PhiExpansion,
    /// `beta(L_{2n+2} - 1) = (10)^{n+1} . 0^{2n+1}1`
    pub odd_end: PhiExpansion,
}

fn word(parts: &[(&str, usize)]) -> DigitWord {
    parts.iter().fold(DigitWord::empty(), |acc, &(b, k)| {
        acc.concat(&DigitWord::repeat(b, k))
    })
}

pub fn lucas_border_expansions(n: usize) -> Result<BorderExpansions> {
    if n == 0 {
        return precondition("border expansions need n >= 1");
    }
    Ok(BorderExpansions {
        even_start: PhiExpansion::new(
            word(&[("1", 1), ("0", 2 * n)]),
            word(&[("0", 2 * n - 1), ("1", 1)]),
        )?,
        even_end: PhiExpansion::new(word(&[("1", 1), ("01", n)]), word(&[("01", n)]))?,
        odd_start: PhiExpansion::new(
            word(&[("1", 1), ("0", 2 * n + 1)]),
            word(&[("10", n), ("01", 1)]),
        )?,
        odd_end: PhiExpansion::new(word(&[("10", n + 1)]), word(&[("0", 2 * n + 1), ("1", 1)]))?,
    })
}

/// The numbers whose expansions [`lucas_border_expansions`] describes:
/// `(L_{2n}, L_{2n+1}, L_{2n+1} + 1, L_{2n+2} - 1)`.
pub fn lucas_border_values<T: Scalar>(n: usize) -> [T; 4] {
    let one = T::one();
    [
        lucas::<T>(2 * n),
        lucas::<T>(2 * n + 1),
        lucas::<T>(2 * n + 1) + one.clone(),
        lucas::<T>(2 * n + 2) - one,
    ]
}

/// Word surgery `head (cancel_head)^-1 beta (cancel_tail)^-1 tail`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Surgery {
    pub head: &'static str,
    pub cancel_head: Option<&'static str>,
    pub cancel_tail: Option<&'static str>,
    pub tail: &'static str,
}

impl Surgery {
    pub fn apply(&self, inner: &PhiExpansion) -> Result<PhiExpansion> {
        let mut left = inner.left().clone();
        if let Some(c) = self.cancel_head {
            left = left.cancel_prefix(c)?;
        }
        let left = self.head.parse::<DigitWord>()?.concat(&left);
        let mut right = inner.right().clone();
        if let Some(c) = self.cancel_tail {
            right = right.cancel_suffix(c)?;
        }
        let right = right.concat(&self.tail.parse()?);
        PhiExpansion::new(left, right)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PieceLabel {
    A,
    B,
    C,
}

/// One of the three translated pieces of `Lambda_m`: the numbers
/// `Lambda_base + L_shift`, with the rules turning `beta(N - L_shift)` and
/// `gamma-(N - L_shift)` into `beta(N)` and `gamma-(N)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RecursivePiece {
    pub label: PieceLabel,
    pub base: usize,
    pub shift_index: usize,
    pub surgery: Surgery,
    pub gamma_tail: &'static str,
}

impl RecursivePiece {
    pub fn span(&self) -> Span {
        lambda_interval::<i64>(self.base)
            .span()
            .shifted(lucas::<i64>(self.shift_index) as u64)
    }
}

const fn surgery(
    head: &'static str,
    cancel_head: Option<&'static str>,
    cancel_tail: Option<&'static str>,
    tail: &'static str,
) -> Surgery {
    Surgery {
        head,
        cancel_head,
        cancel_tail,
        tail,
    }
}

/// The pieces `Lambda_{m-2} + L_{m-1}`, `Lambda_{m-3} + L_m`,
/// `Lambda_{m-2} + L_m` of `Lambda_m`, for `m >= 3`.
pub fn recursive_pieces(m: usize) -> Result<[RecursivePiece; 3]> {
    if m < 3 {
        return precondition(format!("Lambda_{m} has no recursive splitting"));
    }
    let odd = m % 2 == 1;
    let piece = |label, base, shift_index, s, gamma_tail| RecursivePiece {
        label,
        base,
        shift_index,
        surgery: s,
        gamma_tail,
    };
    Ok(if odd {
        [
            piece(
                PieceLabel::A,
                m - 2,
                m - 1,
                surgery("1000", Some("10"), Some("01"), "1001"),
                "10",
            ),
            piece(
                PieceLabel::B,
                m - 3,
                m,
                surgery("100", None, Some("01"), "001001"),
                "0010",
            ),
            piece(
                PieceLabel::C,
                m - 2,
                m,
                surgery("10", None, Some("01"), "0001"),
                "00",
            ),
        ]
    } else {
        [
            piece(
                PieceLabel::A,
                m - 2,
                m - 1,
                surgery("1000", Some("10"), Some("01"), "0001"),
                "00",
            ),
            piece(
                PieceLabel::B,
                m - 3,
                m,
                surgery("100", None, None, "01"),
                "01",
            ),
            piece(
                PieceLabel::C,
                m - 2,
                m,
                surgery("10", None, None, "01"),
                "01",
            ),
        ]
    })
}

/// The piece of `Lambda_m` containing `n`, with `n - L_shift`.
pub fn piece_of<T: Scalar>(m: usize, n: &T) -> Result<(RecursivePiece, T)> {
    for p in recursive_pieces(m)? {
        let inner = n.clone() - lucas::<T>(p.shift_index);
        if lambda_interval::<T>(p.base).contains(&inner) {
            return Ok((p, inner));
        }
    }
    Err(Error::Inconsistent(format!(
        "{n} lies in no piece of Lambda_{m}"
    )))
}

const BASE_TABLE: [&str; 12] = [
    "0.",
    "1.",
    "10.01",
    "100.01",
    "101.01",
    "1000.1001",
    "1010.0001",
    "10000.0001",
    "10001.0001",
    "10010.0101",
    "10100.0101",
    "10101.0101",
];

/// `beta(N)` by recursion through the Lucas interval pieces, bottoming out
/// at a fixed table for `N <= 11`.
pub fn phi_encode_recursive<T: Scalar>(n: &T) -> Result<PhiExpansion> {
    if n.is_negative() {
        return precondition(format!(
            "phi_encode_recursive expects a natural number, got {n}"
        ));
    }
    if n <= &scalar::<T>(11) {
        let i = n.to_usize().expect("small value");
        return BASE_TABLE[i].parse();
    }
    let m = locate(n)?;
    let (piece, inner) = piece_of(m, n)?;
    piece.surgery.apply(&phi_encode_recursive(&inner)?)
}

/// Checks every element of `Lambda_m` against the surgery rule of its
/// piece, using table expansions on both sides. Returns the first failure.
pub fn verify_piece_surgery(m: usize, table: &ExpansionTable) -> Result<Option<u64>> {
    let whole = lambda_interval::<i64>(m).span();
    table.require(whole.end)?;
    for p in recursive_pieces(m)? {
        let shift = lucas::<i64>(p.shift_index) as u64;
        for n in p.span().iter() {
            let inner = table.expansion(n - shift);
            let ok = matches!(p.surgery.apply(&inner), Ok(e) if e == table.expansion(n));
            if !ok {
                return Ok(Some(n));
            }
        }
    }
    Ok(None)
}

/// A translated copy `Lambda_base + shift`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitPiece {
    pub base: usize,
    pub shift: u64,
}

impl SplitPiece {
    pub fn span(&self) -> Span {
        lambda_interval::<i64>(self.base).span().shifted(self.shift)
    }
}

/// Coding word over `{3, 4, 5}` together with its realizing pieces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplittingWord {
    pub word: String,
    pub pieces: Vec<SplitPiece>,
}

impl SplittingWord {
    pub fn materialize(&self) -> Vec<Span> {
        self.pieces.iter().map(SplitPiece::span).collect()
    }

    /// Pieces abut in order and cover exactly `whole`.
    pub fn tiles(&self, whole: Span) -> bool {
        let spans = self.materialize();
        let mut next = whole.start;
        for s in &spans {
            if s.is_empty() || s.start != next {
                return false;
            }
            next = s.end + 1;
        }
        next == whole.end + 1
    }

    fn letters(&self) -> String {
        self.pieces
            .iter()
            .map(|p| char::from_digit(p.base as u32, 10).unwrap_or('?'))
            .collect()
    }
}

fn replay_lambda(m: usize, shift: u64, out: &mut Vec<SplitPiece>) -> Result<()> {
    if (3..=5).contains(&m) {
        out.push(SplitPiece { base: m, shift });
        return Ok(());
    }
    for p in recursive_pieces(m)? {
        replay_lambda(p.base, shift + lucas::<i64>(p.shift_index) as u64, out)?;
    }
    Ok(())
}

/// `C(Lambda_m)`: `kappa^n(4)` for `m = 2n + 4`, `kappa^n(5)` for
/// `m = 2n + 5`, with shifts from replaying the recursion. The replayed
/// letters and the tiling of `Lambda_m` are checked.
pub fn canonical_splitting_lambda(m: usize) -> Result<SplittingWord> {
    if m < 3 {
        return precondition(format!("canonical splitting needs m >= 3, got {m}"));
    }
    let word = match m {
        3 => "3".to_string(),
        _ if m.is_multiple_of(2) => Morphism::kappa().iterate("4", (m - 4) / 2)?,
        _ => Morphism::kappa().iterate("5", (m - 5) / 2)?,
    };
    let mut pieces = Vec::new();
    replay_lambda(m, 0, &mut pieces)?;
    let s = SplittingWord { word, pieces };
    if s.letters() != s.word {
        return Err(Error::Inconsistent(format!(
            "replayed splitting of Lambda_{m} reads {}, expected {}",
            s.letters(),
            s.word
        )));
    }
    if !s.tiles(lambda_interval::<i64>(m).span()) {
        return Err(Error::Inconsistent(format!(
            "splitting of Lambda_{m} does not tile it"
        )));
    }
    Ok(s)
}

/// `C(Xi_n) = delta(h^{n-2}(b))`, realized by the splittings of
/// `Lambda_{2n-1}` and `Lambda_{2n}` side by side.
pub fn canonical_splitting_xi(n: usize) -> Result<SplittingWord> {
    if n < 2 {
        return precondition(format!("Xi splitting needs n >= 2, got {n}"));
    }
    let hb = Morphism::h().iterate("b", n - 2)?;
    let word = Morphism::delta().apply(&hb)?;
    let mut pieces = canonical_splitting_lambda(2 * n - 1)?.pieces;
    pieces.extend(canonical_splitting_lambda(2 * n)?.pieces);
    let s = SplittingWord { word, pieces };
    if s.letters() != s.word {
        return Err(Error::Inconsistent(format!(
            "splitting of Xi_{n} reads {}, expected {}",
            s.letters(),
            s.word
        )));
    }
    if !s.tiles(xi_interval::<i64>(n)?.span()) {
        return Err(Error::Inconsistent(format!(
            "splitting of Xi_{n} does not tile it"
        )));
    }
    Ok(s)
}

/// Whether `Gamma` and the concatenation of `deltas` agree elementwise on
/// the central `2q` digits. The deltas are given untranslated; the
/// translation is implicit in the pairing by position.
pub fn check_congruence(
    gamma: Span,
    deltas: &[Span],
    q: usize,
    table: &ExpansionTable,
) -> Result<bool> {
    let total: u64 = deltas.iter().map(Span::len).sum();
    if total != gamma.len() {
        return precondition(format!(
            "congruence needs equal sizes: |Gamma| = {}, sum |Delta_i| = {total}",
            gamma.len()
        ));
    }
    table.require(gamma.end)?;
    for d in deltas {
        table.require(d.end)?;
    }
    let mut targets = gamma.iter();
    for d in deltas {
        for n2 in d.iter() {
            let n = targets.next().expect("sizes checked");
            if central_bits(table.packed(n), q) != central_bits(table.packed(n2), q) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `Lambda_m` against `Lambda_{m-2} Lambda_{m-3} Lambda_{m-2}` modulo `q`.
pub fn recursive_congruence(m: usize, q: usize, table: &ExpansionTable) -> Result<bool> {
    if m < 3 {
        return precondition("recursive congruence needs m >= 3");
    }
    let l = |k| lambda_interval::<i64>(k).span();
    check_congruence(l(m), &[l(m - 2), l(m - 3), l(m - 2)], q, table)
}

/// Claims handled by the propagation harness. Blocks have at most four
/// digits on each side of the point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PropagationClaim {
    /// `block` occurs in no expansion.
    Absent { block: CentralPattern },
    /// `block` occurs in `beta(N)` iff `partner` occurs in `beta(N - offset)`.
    Coupled {
        block: CentralPattern,
        partner: CentralPattern,
        offset: u64,
    },
}

impl PropagationClaim {
    /// `N = 1..17` for absence, `N = D..D+17` for coupling.
    pub fn base_window(&self) -> Span {
        match self {
            PropagationClaim::Absent { .. } => Span::new(1, 17),
            PropagationClaim::Coupled { offset, .. } => Span::new(*offset, offset + 17),
        }
    }

    fn validate(&self) -> Result<()> {
        let short = |p: &CentralPattern| p.left.len() <= 4 && p.right.len() <= 4;
        match self {
            PropagationClaim::Absent { block } if short(block) => Ok(()),
            PropagationClaim::Coupled {
                block,
                partner,
                offset,
            } if short(block) && short(partner) && (1..=4).contains(offset) => Ok(()),
            _ => precondition(format!("malformed propagation window: {self:?}")),
        }
    }

    fn holds_at(&self, n: u64, table: &ExpansionTable) -> bool {
        match self {
            PropagationClaim::Absent { block } => !block.matches(table.packed(n)),
            PropagationClaim::Coupled {
                block,
                partner,
                offset,
            } => block.matches(table.packed(n)) == partner.matches(table.packed(n - offset)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropagationReport {
    pub claim: PropagationClaim,
    pub base_window: Span,
    pub hypothesis_holds: bool,
    pub max_n: u64,
    pub first_violation: Option<u64>,
}

impl PropagationReport {
    pub fn passed(&self) -> bool {
        self.hypothesis_holds && self.first_violation.is_none()
    }
}

/// Checks the hypothesis on the base window, then rescans every `N` in
/// the claim's range up to `max_n` for the conclusion.
pub fn propagation_check(
    claim: &PropagationClaim,
    max_n: u64,
    table: &ExpansionTable,
) -> Result<PropagationReport> {
    claim.validate()?;
    let window = claim.base_window();
    table.require(max_n.max(window.end))?;
    let hypothesis_holds = window.iter().all(|n| claim.holds_at(n, table));
    let first = window.start.min(max_n);
    let first_violation = (first..=max_n).find(|&n| n >= window.start && !claim.holds_at(n, table));
    Ok(PropagationReport {
        claim: claim.clone(),
        base_window: window,
        hypothesis_holds,
        max_n,
        first_violation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeration::phi_encode;
    use num_bigint::BigInt;

    fn table(n: u64) -> ExpansionTable {
        ExpansionTable::sequential(n).unwrap()
    }

    #[test]
    fn intervals() {
        let l4 = lambda_interval::<i64>(4);
        assert_eq!((l4.start, l4.end), (7, 11));
        let l1 = lambda_interval::<i64>(1);
        assert_eq!((l1.start, l1.end), (2, 2));
        assert!(lambda_interval::<i64>(0).is_empty());
        assert_eq!(locate(&17i64).unwrap(), 5);
        assert_eq!(locate(&2i64).unwrap(), 1);
        assert!(locate(&1i64).is_err());
        let xi = xi_interval::<i64>(3).unwrap();
        assert_eq!((xi.start, xi.end), (12, 29));
        assert_eq!(xi.len(), lucas::<i64>(6));
    }

    #[test]
    fn tiling_is_exact() {
        let mut next = 2;
        for m in 1..=20 {
            let l = lambda_interval::<i64>(m);
            assert_eq!(l.start, next, "m = {m}");
            next = l.end + 1;
        }
        for n in 2..2000i64 {
            let m = locate(&n).unwrap();
            assert!(lambda_interval::<i64>(m).contains(&n));
        }
    }

    #[test]
    fn border_examples() {
        let b1 = lucas_border_expansions(1).unwrap();
        assert_eq!(b1.even_start.to_string(), "100.01");
        assert_eq!(b1.odd_end.to_string(), "1010.0001");
        let b2 = lucas_border_expansions(2).unwrap();
        assert_eq!(b2.odd_start.to_string(), "100000.101001");
        for n in 1..=6 {
            let b = lucas_border_expansions(n).unwrap();
            let v = lucas_border_values::<i64>(n);
            let es = [&b.even_start, &b.even_end, &b.odd_start, &b.odd_end];
            for (e, x) in es.iter().zip(v) {
                assert_eq!(**e, phi_encode(x as u64).unwrap());
            }
        }
    }

    #[test]
    fn recursive_encoder_agrees_with_add_one() {
        let t = table(3000);
        for n in 0..=3000u64 {
            assert_eq!(
                phi_encode_recursive(&(n as i64)).unwrap(),
                t.expansion(n),
                "N = {n}"
            );
        }
        assert_eq!(
            phi_encode_recursive(&13i64).unwrap().to_string(),
            "100010.001001"
        );
        assert!(phi_encode_recursive(&-1i64).is_err());
    }

    #[test]
    fn recursive_encoder_on_big_integers() {
        let n: BigInt = "1000000000000000000000000".parse().unwrap();
        let e = phi_encode_recursive(&n).unwrap();
        assert_eq!(crate::numeration::phi_decode::<BigInt>(&e).unwrap(), n);
    }

    #[test]
    fn piece_surgery_holds() {
        let t = table(lucas::<i64>(13) as u64);
        for m in 3..=12 {
            assert_eq!(verify_piece_surgery(m, &t).unwrap(), None, "m = {m}");
        }
    }

    #[test]
    fn splitting_examples() {
        let s6 = canonical_splitting_lambda(6).unwrap();
        assert_eq!(s6.word, "434");
        let shifts: Vec<u64> = s6.pieces.iter().map(|p| p.shift).collect();
        assert_eq!(shifts, [11, 18, 18]);
        assert_eq!(canonical_splitting_lambda(8).unwrap().word, "4345434");
        let s3 = canonical_splitting_lambda(3).unwrap();
        assert_eq!((s3.word.as_str(), s3.pieces[0].shift), ("3", 0));
        assert_eq!(canonical_splitting_xi(2).unwrap().word, "34");
        assert_eq!(canonical_splitting_xi(3).unwrap().word, "5434");
        assert_eq!(canonical_splitting_xi(4).unwrap().word, "5454345434");
    }

    #[test]
    fn congruence_examples() {
        let t = table(200);
        let l = |k| lambda_interval::<i64>(k).span();
        assert!(check_congruence(l(5), &[l(3), l(2), l(3)], 1, &t).unwrap());
        assert!(check_congruence(l(6), &[l(4), l(3), l(4)], 3, &t).unwrap());
        assert!(!check_congruence(l(6), &[l(4), l(3), l(4)], 5, &t).unwrap());
        assert!(check_congruence(l(6), &[l(4), l(3)], 1, &t).is_err());
    }

    #[test]
    fn propagation_examples() {
        let t = table(10_000);
        let absent = PropagationClaim::Absent {
            block: "10.1".parse().unwrap(),
        };
        assert!(propagation_check(&absent, 10_000, &t).unwrap().passed());
        let coupled = PropagationClaim::Coupled {
            block: "00.1".parse().unwrap(),
            partner: "100.0".parse().unwrap(),
            offset: 2,
        };
        assert!(propagation_check(&coupled, 10_000, &t).unwrap().passed());
        let pairs = PropagationClaim::Coupled {
            block: "000.0".parse().unwrap(),
            partner: "1010.".parse().unwrap(),
            offset: 1,
        };
        assert!(propagation_check(&pairs, 10_000, &t).unwrap().passed());
        let false_claim = PropagationClaim::Absent {
            block: "00.1".parse().unwrap(),
        };
        assert!(!propagation_check(&false_claim, 100, &t).unwrap().passed());
        let bad = PropagationClaim::Coupled {
            block: "00.1".parse().unwrap(),
            partner: "1.".parse().unwrap(),
            offset: 7,
        };
        assert!(propagation_check(&bad, 100, &t).is_err());
    }
}
