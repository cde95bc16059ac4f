//! Named checks over an expansion table, each producing a serializable
//! report. Shared by the command line and the acceptance suite.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::lucas;
use crate::error::{precondition, Result};
use crate::numeration::{phi_decode, phi_decode_paths, verify_zeckphi, DigitWord, PhiCounter};
use crate::occurrence::{
    check_prefix_tree, check_suffix_tree, conjecture_scan, coupling_check, gamma_border_check,
    gamma_recursive, is_special_suffix, one_tree, pi_permutation, r0_candidates,
    rotation_permutation, scan_central, scan_suffix, special_family_reports,
    suffix_difference_check, trident_splitting_holds, tridents, verify_all_gamma,
    verify_pi_arithmetic, zero_tree, ConjectureEntry, Convention, OccurrenceReport,
};
use crate::structure::{
    canonical_splitting_lambda, canonical_splitting_xi, check_congruence, lambda_interval,
    lucas_border_expansions, lucas_border_values, phi_encode_recursive, propagation_check,
    recursive_congruence, verify_piece_surgery, xi_interval, PropagationClaim,
};
use crate::table::ExpansionTable;

pub const CHECK_IDS: [&str; 16] = [
    "zeckphi",
    "ceiling",
    "recursive",
    "borders",
    "splitting-lambda",
    "splitting-xi",
    "congruence",
    "exclusions",
    "suffix-tree",
    "prefix-table",
    "suffix-families",
    "tridents",
    "gamma-all",
    "pi-arith",
    "rotation",
    "conjecture",
];

/// Overrides for the default horizons. `max_n` replaces the numeric
/// horizon, `n` the upper interval index, `max_len` the word length bound.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub max_n: Option<u64>,
    pub n: Option<usize>,
    pub max_len: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub id: String,
    pub passed: bool,
    pub summary: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub details: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_counterexample: Option<String>,
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {}", self.id, self.summary)?;
        if let Some(c) = &self.first_counterexample {
            write!(f, " (first counterexample: {c})")?;
        }
        Ok(())
    }
}

struct Builder {
    id: &'static str,
    details: Vec<String>,
    failure: Option<String>,
}

impl Builder {
    fn new(id: &'static str) -> Self {
        Builder {
            id,
            details: Vec::new(),
            failure: None,
        }
    }

    fn note(&mut self, line: impl Into<String>) {
        self.details.push(line.into());
    }

    fn require(&mut self, ok: bool, what: impl fmt::Display) {
        if !ok && self.failure.is_none() {
            self.failure = Some(what.to_string());
        }
    }

    fn finish(self, summary: impl Into<String>) -> CheckReport {
        CheckReport {
            id: self.id.to_string(),
            passed: self.failure.is_none(),
            summary: summary.into(),
            details: self.details,
            first_counterexample: self.failure,
        }
    }
}

fn lu(k: usize) -> u64 {
    lucas::<i64>(k) as u64
}

fn id_of(id: &str) -> Result<&'static str> {
    match CHECK_IDS.iter().find(|&&c| c == id) {
        Some(c) => Ok(c),
        None => precondition(format!(
            "unknown check {id:?}; known: {}, all",
            CHECK_IDS.join(", ")
        )),
    }
}

/// Largest `N` the check reads from the table.
pub fn table_bound(id: &str, cfg: &VerifyConfig) -> Result<u64> {
    let n = |default: usize| cfg.n.unwrap_or(default);
    Ok(match id_of(id)? {
        "zeckphi" => 0,
        "ceiling" | "exclusions" | "suffix-families" => cfg.max_n.unwrap_or(100_000),
        "recursive" => 0,
        "borders" => lu(2 * n(9) + 2),
        "splitting-lambda" | "splitting-xi" => 0,
        "congruence" => lu(17),
        "suffix-tree" | "prefix-table" => cfg.max_n.unwrap_or(10_000),
        "tridents" => lu(2 * n(8) + 1).max(lu(2 * n(7) + 1)),
        "gamma-all" => lu(2 * n(7) + 1),
        "pi-arith" | "rotation" => lu(2 * n(8) + 1),
        "conjecture" => cfg.max_n.unwrap_or(1_000_000) + 2,
        _ => unreachable!(),
    })
}

pub fn run_check(id: &str, cfg: &VerifyConfig, table: &ExpansionTable) -> Result<CheckReport> {
    table.require(table_bound(id, cfg)?)?;
    match id_of(id)? {
        "zeckphi" => zeckphi(cfg),
        "ceiling" => ceiling(cfg, table),
        "recursive" => recursive(cfg),
        "borders" => borders(cfg, table),
        "splitting-lambda" => splitting_lambda(),
        "splitting-xi" => splitting_xi(cfg),
        "congruence" => congruence(table),
        "exclusions" => exclusions(cfg, table),
        "suffix-tree" => suffix_tree(cfg, table),
        "prefix-table" => prefix_table(cfg, table),
        "suffix-families" => suffix_families(cfg, table),
        "tridents" => trident_check(cfg, table),
        "gamma-all" => gamma_all(cfg, table),
        "pi-arith" => pi_arith(cfg, table),
        "rotation" => rotation(cfg, table),
        "conjecture" => conjecture(cfg, table),
        _ => unreachable!(),
    }
}

fn zeckphi(cfg: &VerifyConfig) -> Result<CheckReport> {
    let max_n = cfg.max_n.unwrap_or(100_000);
    let r = verify_zeckphi(max_n)?;
    let mut b = Builder::new("zeckphi");
    if let Some(m) = &r.first_counterexample {
        b.require(
            false,
            format!("N = {}: beta+ = {}, Z = {}", m.n, m.beta_plus, m.zeck),
        );
    }
    Ok(b.finish(format!(
        "beta+(N) = Z(N + S(N)) for {} values N <= {max_n}",
        r.checked
    )))
}

fn ceiling(cfg: &VerifyConfig, table: &ExpansionTable) -> Result<CheckReport> {
    let max_n = cfg.max_n.unwrap_or(100_000);
    let mut b = Builder::new("ceiling");
    for n in 0..=max_n {
        let paths = phi_decode_paths::<i64>(&table.expansion(n))?;
        b.require(
            paths.exact == n as i64 && paths.ceiling == n as i64,
            format!("N = {n}: exact {}, ceiling {}", paths.exact, paths.ceiling),
        );
    }
    Ok(b.finish(format!(
        "exact and ceiling decoding return N for N <= {max_n}"
    )))
}

fn recursive(cfg: &VerifyConfig) -> Result<CheckReport> {
    let max_n = cfg.max_n.unwrap_or(lu(18));
    let mut b = Builder::new("recursive");
    let mut c = PhiCounter::new();
    for n in 0..=max_n {
        if n > 0 {
            c.increment()?;
        }
        let e = c.expansion();
        let rec = phi_encode_recursive(&(n as i64))?;
        b.require(rec == e, format!("N = {n}: add-one {e}, recursive {rec}"));
        b.require(
            phi_decode::<i64>(&e)? == n as i64,
            format!("N = {n}: decode of {e}"),
        );
    }
    let table = ExpansionTable::sequential(max_n)?;
    let mut m = 3;
    while lambda_interval::<i64>(m).end as u64 <= max_n {
        if let Some(n) = verify_piece_surgery(m, &table)? {
            b.require(false, format!("surgery of Lambda_{m} fails at N = {n}"));
        }
        m += 1;
    }
    b.note(format!(
        "piece surgery checked on Lambda_3..Lambda_{}",
        m - 1
    ));
    Ok(b.finish(format!(
        "add-one, recursive and decoded expansions agree for N <= {max_n}"
    )))
}

fn borders(cfg: &VerifyConfig, table: &ExpansionTable) -> Result<CheckReport> {
    let top = cfg.n.unwrap_or(9);
    let mut b = Builder::new("borders");
    for n in 1..=top {
        let e = lucas_border_expansions(n)?;
        let values = lucas_border_values::<i64>(n);
        let forms = [&e.even_start, &e.even_end, &e.odd_start, &e.odd_end];
        for (v, form) in values.iter().zip(forms) {
            let got = table.expansion(*v as u64);
            b.require(&got == form, format!("N = {v}: expected {form}, got {got}"));
        }
        if let Some(at) = gamma_border_check(n, table)? {
            b.require(false, format!("gamma-/code border value at N = {at}"));
        }
    }
    Ok(b.finish(format!(
        "border expansions, gamma- and codes for n = 1..{top}"
    )))
}

fn splitting_lambda() -> Result<CheckReport> {
    let mut b = Builder::new("splitting-lambda");
    let w6 = canonical_splitting_lambda(6)?.word;
    let w8 = canonical_splitting_lambda(8)?.word;
    b.require(w6 == "434", format!("C(Lambda_6) = {w6}"));
    b.require(w8 == "4345434", format!("C(Lambda_8) = {w8}"));
    for m in 3..=16 {
        let s = canonical_splitting_lambda(m)?;
        b.note(format!("Lambda_{m}: {} pieces", s.word.len()));
    }
    Ok(b.finish("canonical splittings of Lambda_3..Lambda_16 replay and tile"))
}

fn splitting_xi(cfg: &VerifyConfig) -> Result<CheckReport> {
    let top = cfg.n.unwrap_or(8);
    let mut b = Builder::new("splitting-xi");
    let w2 = canonical_splitting_xi(2)?.word;
    let w3 = canonical_splitting_xi(3)?.word;
    b.require(w2 == "34", format!("C(Xi_2) = {w2}"));
    b.require(w3 == "5434", format!("C(Xi_3) = {w3}"));
    for n in 2..=top {
        let s = canonical_splitting_xi(n)?;
        b.note(format!("Xi_{n}: {}", s.word));
    }
    Ok(b.finish(format!(
        "canonical splittings of Xi_2..Xi_{top} replay and tile"
    )))
}

fn congruence(table: &ExpansionTable) -> Result<CheckReport> {
    let mut b = Builder::new("congruence");
    let l = |k| lambda_interval::<i64>(k).span();
    b.require(
        check_congruence(l(5), &[l(3), l(2), l(3)], 1, table)?,
        "Lambda_5 ~ Lambda_3 Lambda_2 Lambda_3 mod 1",
    );
    b.require(
        check_congruence(l(6), &[l(4), l(3), l(4)], 3, table)?,
        "Lambda_6 ~ Lambda_4 Lambda_3 Lambda_4 mod 3",
    );
    b.note(format!(
        "Lambda_6 ~ Lambda_4 Lambda_3 Lambda_4 mod 5: {}",
        check_congruence(l(6), &[l(4), l(3), l(4)], 5, table)?
    ));
    for m in 8..=16 {
        b.require(
            recursive_congruence(m, 4, table)?,
            format!("Lambda_{m} mod 4"),
        );
    }
    for m in 8..=15 {
        let whole = crate::structure::Span::new(l(m).start, l(m + 1).end);
        let parts = [l(m - 2), l(m - 3), l(m - 2), l(m - 1), l(m - 2), l(m - 1)];
        b.require(
            check_congruence(whole, &parts, 4, table)?,
            format!("glued Lambda_{m} Lambda_{} mod 4", m + 1),
        );
    }
    Ok(b.finish("printed congruences, mod-4 recursion for m = 8..16 and glued pairs"))
}

fn exclusions(cfg: &VerifyConfig, table: &ExpansionTable) -> Result<CheckReport> {
    let max_n = cfg.max_n.unwrap_or(100_000);
    let mut b = Builder::new("exclusions");
    let one: DigitWord = "1".parse()?;
    let zero: DigitWord = "0".parse()?;
    for m in 1..=8 {
        let even = one.concat(&DigitWord::zeros(2 * m));
        let odd = one.concat(&DigitWord::zeros(2 * m + 1));
        let hits = scan_central(&even, &one, max_n, table)?;
        b.require(
            hits.is_empty(),
            format!("{even}.1 at N = {:?}", hits.first()),
        );
        let hits = scan_central(&odd, &zero, max_n, table)?;
        b.require(
            hits.is_empty(),
            format!("{odd}.0 at N = {:?}", hits.first()),
        );
        let suffix = even.concat(&one);
        let hits = scan_suffix(&suffix, max_n, table)?;
        b.require(
            hits.is_empty(),
            format!("suffix {suffix} at N = {:?}", hits.first()),
        );
    }
    let claims = [
        PropagationClaim::Absent {
            block: "10.1".parse()?,
        },
        PropagationClaim::Coupled {
            block: "00.1".parse()?,
            partner: "100.0".parse()?,
            offset: 2,
        },
        PropagationClaim::Coupled {
            block: "000.0".parse()?,
            partner: "1010.".parse()?,
            offset: 1,
        },
    ];
    for claim in &claims {
        let r = propagation_check(claim, max_n.min(table.max_n()), table)?;
        b.note(format!(
            "{claim:?}: hypothesis {}, violation {:?}",
            r.hypothesis_holds, r.first_violation
        ));
        b.require(
            r.passed(),
            format!("{claim:?} violated at {:?}", r.first_violation),
        );
    }
    Ok(b.finish(format!(
        "excluded blocks absent for m = 1..8, N <= {max_n}; propagation claims hold"
    )))
}

fn push_reports(b: &mut Builder, reports: &[OccurrenceReport]) {
    for r in reports {
        let predicted = r
            .predicted
            .as_ref()
            .map_or("-".to_string(), |p| p.to_string());
        b.note(format!("{}: {} {}", r.block, predicted, r.verdict));
        b.require(r.is_match(), format!("{} {}", r.block, r.verdict));
    }
}

fn suffix_tree(cfg: &VerifyConfig, table: &ExpansionTable) -> Result<CheckReport> {
    let horizon = cfg.max_n.unwrap_or(10_000);
    let mut b = Builder::new("suffix-tree");
    let mut nodes = check_suffix_tree(&zero_tree(), horizon, table)?;
    nodes.extend(check_suffix_tree(&one_tree(), horizon, table)?);
    for node in &nodes {
        b.require(
            node.predictor_agrees,
            format!("{}: predictor disagrees", node.report.block),
        );
    }
    let reports: Vec<OccurrenceReport> = nodes.into_iter().map(|n| n.report).collect();
    push_reports(&mut b, &reports);
    let (plain, with_zero) = r0_candidates(horizon, table)?;
    b.note(format!(
        "R_0 as V(-1,3,0): {plain}; as V0(-1,3,0): {with_zero}"
    ));
    Ok(b.finish(format!("{} tree nodes to {horizon}", reports.len())))
}

fn prefix_table(cfg: &VerifyConfig, table: &ExpansionTable) -> Result<CheckReport> {
    let horizon = cfg.max_n.unwrap_or(10_000);
    let mut b = Builder::new("prefix-table");
    let reports = check_prefix_tree(horizon, table)?;
    push_reports(&mut b, &reports);
    Ok(b.finish(format!("{} start blocks to {horizon}", reports.len())))
}

fn suffix_families(cfg: &VerifyConfig, table: &ExpansionTable) -> Result<CheckReport> {
    let horizon = cfg.max_n.unwrap_or(100_000);
    let mut b = Builder::new("suffix-families");
    let reports = special_family_reports(4, horizon, table)?;
    push_reports(&mut b, &reports);
    let mut lettered = 0;
    for len in 2..=10 {
        for w in DigitWord::admissible_words(len) {
            if is_special_suffix(&w) {
                continue;
            }
            b.require(
                suffix_difference_check(&w, horizon, table)?,
                format!("difference word of R_{w}"),
            );
            lettered += 1;
        }
    }
    b.note(format!("{lettered} words with Lucas difference letters"));
    let (mut coupled, mut literal) = (0, 0);
    for len in 2..=8 {
        for w in DigitWord::admissible_words(len) {
            if w.last() != Some(1) {
                continue;
            }
            let c = coupling_check(&w, horizon, table)?;
            if !c.nonempty {
                continue;
            }
            b.require(c.with_central_zero, format!("coupling of R_{w}"));
            coupled += 1;
            literal += c.without_central_zero as usize;
        }
    }
    b.note(format!(
        "coupling R_w = R_(w'.0) + 1 on {coupled} words; R_w = R_w' + 1 holds on {literal} of them"
    ));
    Ok(b.finish(format!(
        "{} family blocks, {lettered} difference words, {coupled} couplings to {horizon}",
        reports.len()
    )))
}

fn trident_check(cfg: &VerifyConfig, table: &ExpansionTable) -> Result<CheckReport> {
    let top = cfg.n.unwrap_or(7);
    let mut b = Builder::new("tridents");
    for n in 1..=top {
        let g = tridents(n, table)?;
        b.note(format!(
            "Xi_{n}: {} tridents, {} singletons",
            g.tridents.len(),
            g.singletons.len()
        ));
        b.require(g.counts_hold(), format!("counts in Xi_{n}"));
    }
    for n in 1..=top.max(8) {
        b.require(
            trident_splitting_holds(n, table)?,
            format!("trident splitting at Xi_{n}"),
        );
    }
    let end = xi_interval::<i64>(top)?.end as u64;
    for n in 2..=end {
        let ours = gamma_recursive(&(n as i64))?;
        let direct = crate::numeration::gamma_minus(&table.expansion(n))?;
        b.require(
            ours == direct,
            format!("gamma-({n}): recursive {ours}, direct {direct}"),
        );
    }
    Ok(b.finish(format!(
        "trident counts for n = 1..{top}, recursive gamma- for N <= {end}"
    )))
}

fn gamma_all(cfg: &VerifyConfig, table: &ExpansionTable) -> Result<CheckReport> {
    let top = cfg.n.unwrap_or(7);
    let mut b = Builder::new("gamma-all");
    for n in 1..=top {
        b.require(verify_all_gamma(n, table)?, format!("Xi_{n}"));
    }
    Ok(b.finish(format!(
        "beta- over Xi_n is every admissible word of length 2n ending in 1, n = 1..{top}"
    )))
}

fn pi_arith(cfg: &VerifyConfig, table: &ExpansionTable) -> Result<CheckReport> {
    let top = cfg.n.unwrap_or(8);
    let mut b = Builder::new("pi-arith");
    for n in 1..=top {
        let p = pi_permutation(n, table)?;
        if n <= 3 {
            b.note(format!("Pi_{}: {p}", 2 * n));
        }
        b.require(verify_pi_arithmetic(&p), format!("Pi_{} = {p}", 2 * n));
    }
    if top >= 3 {
        b.require(pi_permutation(2, table)?.values == [2, 0, 1], "Pi_4");
        b.require(
            pi_permutation(3, table)?.values == [7, 2, 5, 0, 3, 6, 1, 4],
            "Pi_6",
        );
    }
    Ok(b.finish(format!(
        "Pi_2n starts at F_2n - 1 and steps by F_(2n-2), n = 1..{top}"
    )))
}

fn rotation(cfg: &VerifyConfig, table: &ExpansionTable) -> Result<CheckReport> {
    let top = cfg.n.unwrap_or(8);
    let mut b = Builder::new("rotation");
    let s3 = rotation_permutation(3, Convention::PaperSketch)?;
    b.require(
        s3.intermediate == [0, 5, 2, 7, 4, 1, 6, 3],
        "intermediate orbit for n = 3",
    );
    for n in 2..=top {
        let pi = pi_permutation(n, table)?.values;
        for conv in [Convention::PaperSketch, Convention::RawOrbit] {
            let r = rotation_permutation(n, conv)?;
            b.require(r.values == pi, format!("n = {n}, convention {conv}"));
        }
    }
    b.note("both conventions reproduce Pi_2n");
    Ok(b.finish(format!("rotation order equals Pi_2n for n = 2..{top}")))
}

/// Classified entries plus the two printed instances.
pub fn conjecture_check(entries: &[ConjectureEntry]) -> CheckReport {
    let mut b = Builder::new("conjecture");
    for e in entries {
        b.note(e.to_string());
        b.require(e.supports(), e);
    }
    let class = |word: &str, k: usize| {
        entries
            .iter()
            .find(|e| e.word == word)
            .and_then(|e| e.sequences.get(k))
            .and_then(|s| s.class.as_ref())
            .map(|c| c.to_string())
    };
    b.require(
        class("1001", 0).as_deref() == Some("X_G(29,18)"),
        ".1001 is not X_G(29,18)",
    );
    b.require(
        class("0100", 0).as_deref() == Some("X_H(18,11)"),
        ".0100 first-of-trident is not X_H(18,11)",
    );
    b.finish(format!("{} start blocks classified", entries.len()))
}

fn conjecture(cfg: &VerifyConfig, table: &ExpansionTable) -> Result<CheckReport> {
    let max_len = cfg.max_len.unwrap_or(5);
    let horizon = cfg.max_n.unwrap_or(1_000_000);
    let entries = conjecture_scan(max_len, horizon, table)?;
    let mut r = conjecture_check(&entries);
    r.summary = format!("{} to {horizon}", r.summary);
    Ok(r)
}
