use crate::error::Result;
use crate::numeration::DigitWord;
use crate::table::{CentralPattern, ExpansionTable};

/// `R_w`: all `N <= max_n` whose left padded `beta+` ends in `w`.
pub fn scan_suffix(w: &DigitWord, max_n: u64, table: &ExpansionTable) -> Result<Vec<u64>> {
    table.scan(&CentralPattern::suffix(w.clone())?, max_n)
}

/// `R_{w.v}`: suffix `w` of `beta+` and prefix `v` of `beta-` together.
pub fn scan_central(
    w: &DigitWord,
    v: &DigitWord,
    max_n: u64,
    table: &ExpansionTable,
) -> Result<Vec<u64>> {
    table.scan(&CentralPattern::new(w.clone(), v.clone())?, max_n)
}

/// `R_{.v}`: all `2 <= N <= max_n` whose right padded `beta-` starts with
/// `v`. `N = 0, 1` have no negative part and are left out.
pub fn scan_prefix(v: &DigitWord, max_n: u64, table: &ExpansionTable) -> Result<Vec<u64>> {
    let mut out = table.scan(&CentralPattern::prefix(v.clone())?, max_n)?;
    out.retain(|&n| n >= 2);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> DigitWord {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        let t = ExpansionTable::sequential(100).unwrap();
        assert_eq!(scan_suffix(&w("10"), 11, &t).unwrap(), [2, 6, 9]);
        assert_eq!(scan_suffix(&w("1"), 11, &t).unwrap(), [1, 4, 8, 11]);
        assert!(scan_suffix(&w("1001"), 100, &t).unwrap().is_empty());
        assert!(scan_suffix(&w("11"), 100, &t).is_err());
        assert_eq!(
            scan_central(&w("00"), &w("1"), 16, &t).unwrap(),
            [5, 12, 16]
        );
        assert_eq!(
            scan_central(&w("00"), &w("0"), 11, &t).unwrap(),
            [0, 3, 7, 10]
        );
        assert!(scan_central(&w("10"), &w("1"), 100, &t).unwrap().is_empty());
        assert_eq!(scan_prefix(&w("1"), 16, &t).unwrap(), [5, 12, 16]);
        assert_eq!(
            scan_prefix(&w("0"), 11, &t).unwrap(),
            [2, 3, 4, 6, 7, 8, 9, 10, 11]
        );
        assert_eq!(scan_prefix(&w("101"), 12, &t).unwrap(), [12]);
    }
}
