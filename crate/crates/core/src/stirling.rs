//! Classical and coloured Stirling and Bell numbers, the triple-index
//! coefficient tables of powers of `b^r a+ a`, and the three-variable
//! generating polynomials of the two-mode tables.
//!
//! Every table here is computed from the rewrite engine, so the recursion
//! checkers in this module compare independent quantities: a closed
//! recursion on table entries against tables obtained by normal ordering.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::modes::ModeSystem;
use crate::monomial::{Monomial, NormalForm};
use crate::report::{CheckItem, CheckReport};
use crate::rewrite::normal_order_rewrite;
use crate::word::{Generator, Word};

/// Stirling number of the second kind, by the triangle recursion.
pub fn classical_stirling(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    // row DP: row[j] = S(m, j)
    let mut row: Vec<BigInt> = alloc::vec![BigInt::zero(); (n + 1) as usize];
    row[0] = BigInt::one();
    for _m in 1..=n {
        for j in (1..row.len()).rev() {
            row[j] = &row[j - 1] + BigInt::from(j) * &row[j];
        }
        row[0] = BigInt::zero();
    }
    row[k as usize].clone()
}

/// Bell number: the number of set partitions of an n-element set.
pub fn classical_bell(n: u32) -> BigInt {
    (0..=n).map(|k| classical_stirling(n, k)).sum()
}

/// The index of a monomial in table order: creator exponents in ascending
/// mode order, then annihilator exponents in descending mode order.
pub fn monomial_index(m: &Monomial) -> Vec<u32> {
    let mut idx = m.creators.clone();
    idx.extend(m.annihilators.iter().rev());
    idx
}

/// What a coefficient table is a table of.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TableKind {
    /// Coefficients of the normal ordering of `N_1^{e_1} ... N_n^{e_n}`.
    First { exponents: Vec<u32> },
    /// Coefficients of the normal ordering of `(N_1 ... N_n)^power`.
    Second { modes: usize, power: u32 },
}

impl TableKind {
    pub fn modes(&self) -> usize {
        match self {
            TableKind::First { exponents } => exponents.len(),
            TableKind::Second { modes, .. } => *modes,
        }
    }
}

/// A sparse table of integer coefficients keyed by monomial index. Absent
/// indices read as zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StirlingTable {
    kind: TableKind,
    entries: BTreeMap<Vec<u32>, BigInt>,
}

impl StirlingTable {
    fn from_normal_form(kind: TableKind, nf: &NormalForm) -> StirlingTable {
        let entries = nf
            .terms()
            .map(|(m, c)| (monomial_index(m), c.clone()))
            .collect();
        StirlingTable { kind, entries }
    }

    pub fn kind(&self) -> &TableKind {
        &self.kind
    }

    pub fn modes(&self) -> usize {
        self.kind.modes()
    }

    pub fn get(&self, index: &[u32]) -> BigInt {
        self.entries
            .get(index)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Like [`StirlingTable::get`] but any negative component reads as zero.
    pub fn get_signed(&self, index: &[i64]) -> BigInt {
        if index.iter().any(|&x| x < 0) {
            return BigInt::zero();
        }
        let idx: Vec<u32> = index.iter().map(|&x| x as u32).collect();
        self.get(&idx)
    }

    /// Entries in ascending lexicographic index order.
    pub fn entries(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of all entries, the associated Bell-type number.
    pub fn sum(&self) -> BigInt {
        self.entries.values().sum()
    }
}

/// The word `N_1^{e_1} ... N_n^{e_n}` with `N_i = a_i+ a_i`.
pub fn first_type_word(sys: &ModeSystem, exponents: &[u32]) -> Word {
    assert_eq!(exponents.len(), sys.modes());
    let mut word = Word::empty();
    for (m, &e) in exponents.iter().enumerate() {
        word = word.concat(&crate::word::number_word(sys, (m + 1) as u32, e));
    }
    word
}

/// The word `(N_1 N_2 ... N_n)^power`.
pub fn second_type_word(sys: &ModeSystem, power: u32) -> Word {
    let mut block = Word::empty();
    for m in 1..=sys.modes() as u32 {
        block = block.concat(&crate::word::number_word(sys, m, 1));
    }
    let mut word = Word::empty();
    for _ in 0..power {
        word = word.concat(&block);
    }
    word
}

/// Coefficient table of the normal ordering of `N_1^{e_1} ... N_n^{e_n}`.
pub fn coloured_stirling_first(sys: &ModeSystem, exponents: &[u32]) -> StirlingTable {
    let nf = normal_order_rewrite(&first_type_word(sys, exponents), sys);
    StirlingTable::from_normal_form(
        TableKind::First {
            exponents: exponents.to_vec(),
        },
        &nf,
    )
}

/// Coefficient table of the normal ordering of `(N_1 ... N_n)^power`.
pub fn coloured_stirling_second(sys: &ModeSystem, power: u32) -> StirlingTable {
    let nf = normal_order_rewrite(&second_type_word(sys, power), sys);
    StirlingTable::from_normal_form(
        TableKind::Second {
            modes: sys.modes(),
            power,
        },
        &nf,
    )
}

/// Sum of the first-type table: the coloured Bell number of the exponents.
pub fn coloured_bell_first(sys: &ModeSystem, exponents: &[u32]) -> BigInt {
    coloured_stirling_first(sys, exponents).sum()
}

/// Sum of the second-type table.
pub fn coloured_bell_second(sys: &ModeSystem, power: u32) -> BigInt {
    coloured_stirling_second(sys, power).sum()
}

/// Coefficient table for powers of `b^r a+ a` over the coupled two-mode
/// system: the normal ordering of `(b^r a+ a)^n` is a sum of monomials
/// `(a+)^i b^j a^k`, and the table stores their coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnrTable {
    r: u32,
    n: u32,
    entries: BTreeMap<(u32, u32, u32), BigInt>,
}

impl CnrTable {
    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn get(&self, i: u32, j: u32, k: u32) -> BigInt {
        self.entries
            .get(&(i, j, k))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn get_signed(&self, i: i64, j: i64, k: i64) -> BigInt {
        if i < 0 || j < 0 || k < 0 {
            return BigInt::zero();
        }
        self.get(i as u32, j as u32, k as u32)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(u32, u32, u32), &BigInt)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn sum(&self) -> BigInt {
        self.entries.values().sum()
    }
}

/// The word `(b^r a+ a)^n` over two modes.
pub fn cnr_word(r: u32, n: u32) -> Word {
    let mut letters = Vec::with_capacity((n * (r + 2)) as usize);
    for _ in 0..n {
        for _ in 0..r {
            letters.push(Generator::annihilator(2));
        }
        letters.push(Generator::creator(1));
        letters.push(Generator::annihilator(1));
    }
    Word::from_letters(letters)
}

/// Computes the coefficient table of `(b^r a+ a)^n` on the coupled two-mode
/// system. No second-mode creator can appear, so each monomial is
/// `(a+)^i b^j a^k` and is keyed by `(i, j, k)`.
pub fn cnr_table(r: u32, n: u32) -> CnrTable {
    let sys = ModeSystem::coupled(2);
    let nf = normal_order_rewrite(&cnr_word(r, n), &sys);
    let mut entries = BTreeMap::new();
    for (m, c) in nf.terms() {
        debug_assert_eq!(m.creators[1], 0, "no second-mode creator can arise");
        entries.insert(
            (m.creators[0], m.annihilators[1], m.annihilators[0]),
            c.clone(),
        );
    }
    CnrTable { r, n, entries }
}

struct ItemAcc {
    name: String,
    cases: u64,
    mismatches: u64,
    first_detail: Option<String>,
}

impl ItemAcc {
    fn new(name: &str) -> ItemAcc {
        ItemAcc {
            name: String::from(name),
            cases: 0,
            mismatches: 0,
            first_detail: None,
        }
    }

    fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.mismatches += 1;
            if self.first_detail.is_none() {
                self.first_detail = Some(detail());
            }
        }
    }

    fn finish(self) -> CheckItem {
        if self.mismatches == 0 {
            CheckItem::pass(&self.name, self.cases)
        } else {
            CheckItem::fail(
                &self.name,
                self.cases,
                format!(
                    "{} of {} cases mismatched; first: {}",
                    self.mismatches,
                    self.cases,
                    self.first_detail.unwrap_or_default()
                ),
            )
        }
    }
}

/// Checks the closed recursions and structural facts of the two-mode
/// coloured Stirling tables against tables computed by normal ordering:
/// the three-term recursions in each exponent of the first type, the
/// eight-term recursion of the second type, reduction to classical Stirling
/// numbers when one exponent vanishes, corner and support constraints, Bell
/// sums, and the factorization over noncoupled modes.
pub fn check_stirling_recursions(na_max: u32, nb_max: u32, m_max: u32) -> CheckReport {
    let sys = ModeSystem::coupled(2);
    let mut first: BTreeMap<(u32, u32), StirlingTable> = BTreeMap::new();
    for na in 0..=na_max {
        for nb in 0..=nb_max {
            first.insert((na, nb), coloured_stirling_first(&sys, &[na, nb]));
        }
    }
    let second: Vec<StirlingTable> = (0..=m_max)
        .map(|m| coloured_stirling_second(&sys, m))
        .collect();

    let mut report = CheckReport::new();

    let mut item = ItemAcc::new("first-type recursion, step in the first exponent");
    for na in 0..na_max {
        for nb in 0..=nb_max {
            let base = &first[&(na, nb)];
            let target = &first[&(na + 1, nb)];
            for i in 0..=(na + 2) as i64 {
                for j in 0..=(nb + 1) as i64 {
                    for k in 0..=(nb + 1) as i64 {
                        let l = i + j - k;
                        if l < 0 {
                            continue;
                        }
                        let lhs = target.get_signed(&[i, j, k, l]);
                        let rhs = base.get_signed(&[i - 1, j, k, l - 1])
                            + BigInt::from(j + 1) * base.get_signed(&[i - 1, j + 1, k, l])
                            + BigInt::from(i) * base.get_signed(&[i, j, k, l]);
                        item.record(lhs == rhs, || {
                            format!(
                                "step ({na},{nb})->({},{nb}) at ({i},{j},{k},{l}): table {lhs}, recursion {rhs}",
                                na + 1
                            )
                        });
                    }
                }
            }
        }
    }
    report.push(item.finish());

    let mut item = ItemAcc::new("first-type recursion, step in the second exponent");
    for na in 0..=na_max {
        for nb in 0..nb_max {
            let base = &first[&(na, nb)];
            let target = &first[&(na, nb + 1)];
            for i in 0..=(na + 1) as i64 {
                for j in 0..=(nb + 2) as i64 {
                    for k in 0..=(nb + 2) as i64 {
                        let l = i + j - k;
                        if l < 0 {
                            continue;
                        }
                        let lhs = target.get_signed(&[i, j, k, l]);
                        let rhs = base.get_signed(&[i, j - 1, k - 1, l])
                            + BigInt::from(k) * base.get_signed(&[i, j, k, l])
                            + BigInt::from(l + 1) * base.get_signed(&[i, j, k - 1, l + 1]);
                        item.record(lhs == rhs, || {
                            format!(
                                "step ({na},{nb})->({na},{}) at ({i},{j},{k},{l}): table {lhs}, recursion {rhs}",
                                nb + 1
                            )
                        });
                    }
                }
            }
        }
    }
    report.push(item.finish());

    let mut item = ItemAcc::new("second-type recursion, eight-term step");
    for n in 0..m_max {
        let base = &second[n as usize];
        let target = &second[(n + 1) as usize];
        let hi = (n + 2) as i64;
        for i in 0..=hi {
            for j in 0..=hi {
                for k in 0..=hi {
                    let l = i + j - k;
                    if l < 0 {
                        continue;
                    }
                    let lhs = target.get_signed(&[i, j, k, l]);
                    let rhs = base.get_signed(&[i - 1, j - 1, k - 1, l - 1])
                        + BigInt::from(j + 1) * base.get_signed(&[i - 1, j, k - 1, l])
                        + BigInt::from(j) * base.get_signed(&[i - 1, j, k, l - 1])
                        + BigInt::from((j + 1) * (j + 1)) * base.get_signed(&[i - 1, j + 1, k, l])
                        + BigInt::from(i) * base.get_signed(&[i, j - 1, k - 1, l])
                        + BigInt::from(i) * base.get_signed(&[i, j - 1, k, l - 1])
                        + BigInt::from(i * (2 * j + 1)) * base.get_signed(&[i, j, k, l])
                        + BigInt::from(i * (i + 1)) * base.get_signed(&[i + 1, j - 1, k, l]);
                    item.record(lhs == rhs, || {
                        format!(
                            "step {n}->{} at ({i},{j},{k},{l}): table {lhs}, recursion {rhs}",
                            n + 1
                        )
                    });
                }
            }
        }
    }
    report.push(item.finish());

    let mut item = ItemAcc::new("reduction to classical Stirling numbers at a zero exponent");
    for na in 0..=na_max {
        let table = &first[&(na, 0)];
        for i in 0..=na {
            let expected = classical_stirling(na, i);
            let got = table.get(&[i, 0, 0, i]);
            item.record(got == expected, || {
                format!("({na},0) diagonal at {i}: table {got}, classical {expected}")
            });
        }
        item.record(
            table
                .entries()
                .all(|(idx, _)| idx[1] == 0 && idx[2] == 0 && idx[0] == idx[3]),
            || format!("({na},0) has an off-diagonal entry"),
        );
    }
    for nb in 0..=nb_max {
        let table = &first[&(0, nb)];
        for j in 0..=nb {
            let expected = classical_stirling(nb, j);
            let got = table.get(&[0, j, j, 0]);
            item.record(got == expected, || {
                format!("(0,{nb}) diagonal at {j}: table {got}, classical {expected}")
            });
        }
        item.record(
            table
                .entries()
                .all(|(idx, _)| idx[0] == 0 && idx[3] == 0 && idx[1] == idx[2]),
            || format!("(0,{nb}) has an off-diagonal entry"),
        );
    }
    report.push(item.finish());

    let mut item = ItemAcc::new("corner entries and support constraints");
    for na in 0..=na_max {
        for nb in 0..=nb_max {
            let table = &first[&(na, nb)];
            item.record(table.get(&[na, nb, nb, na]).is_one(), || {
                format!("first-type ({na},{nb}) corner is not 1")
            });
            item.record(
                table.entries().all(|(idx, _)| {
                    idx[0] <= na
                        && idx[3] <= na
                        && idx[1] <= nb
                        && idx[2] <= nb
                        && idx[0] + idx[1] == idx[2] + idx[3]
                }),
                || format!("first-type ({na},{nb}) breaks a support constraint"),
            );
        }
    }
    for m in 0..=m_max {
        let table = &second[m as usize];
        item.record(table.get(&[m, m, m, m]).is_one(), || {
            format!("second-type {m} corner is not 1")
        });
        item.record(
            table
                .entries()
                .all(|(idx, _)| idx.iter().all(|&x| x <= m) && idx[0] + idx[1] == idx[2] + idx[3]),
            || format!("second-type {m} breaks a support constraint"),
        );
    }
    report.push(item.finish());

    let mut item = ItemAcc::new("Bell sums of the tables");
    for na in 0..=na_max {
        for nb in 0..=nb_max {
            let got = first[&(na, nb)].sum();
            let expected = classical_bell(na + nb);
            item.record(got == expected, || {
                format!("first-type ({na},{nb}) sums to {got}, Bell gives {expected}")
            });
        }
    }
    for m in 0..=m_max {
        let got = second[m as usize].sum();
        let expected = classical_bell(2 * m);
        item.record(got == expected, || {
            format!("second-type {m} sums to {got}, Bell gives {expected}")
        });
    }
    report.push(item.finish());

    let mut item = ItemAcc::new("factorization over noncoupled modes");
    let free = ModeSystem::noncoupled(2);
    for na in 0..=na_max {
        for nb in 0..=nb_max {
            let table = coloured_stirling_first(&free, &[na, nb]);
            for i in 0..=na {
                for j in 0..=nb {
                    for k in 0..=nb {
                        for l in 0..=na {
                            let got = table.get(&[i, j, k, l]);
                            let expected = if i == l && j == k {
                                classical_stirling(na, i) * classical_stirling(nb, j)
                            } else {
                                BigInt::zero()
                            };
                            item.record(got == expected, || {
                                format!(
                                    "noncoupled ({na},{nb}) at ({i},{j},{k},{l}): table {got}, product {expected}"
                                )
                            });
                        }
                    }
                }
            }
        }
    }
    report.push(item.finish());

    report
}

/// Which middle coefficient the triple-index recursion uses. The two
/// variants agree when `r <= 1` and disagree from `r = 2` on; only one of
/// them can reproduce the computed tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CnrMiddleFactor {
    JPlusOne,
    JPlusR,
}

/// Checks the recursion `c_{n+1}(i,j,k) = c_n(i-1,j-r,k-1) + mid *
/// c_n(i,j-r+1,k-1) + k c_n(i,j-r,k)` for the chosen middle factor
/// `mid` in `{j+1, j+r}` against computed tables, together with the
/// single-step product identity that the recursion is read off from.
pub fn check_cnr_recursion(r_max: u32, n_max: u32, middle: CnrMiddleFactor) -> CheckReport {
    let mut report = CheckReport::new();

    let name = match middle {
        CnrMiddleFactor::JPlusOne => "power-step recursion with middle factor j+1",
        CnrMiddleFactor::JPlusR => "power-step recursion with middle factor j+r",
    };
    let mut item = ItemAcc::new(name);
    for r in 0..=r_max {
        for n in 0..n_max {
            let base = cnr_table(r, n);
            let target = cnr_table(r, n + 1);
            let jhi = (r * (n + 1) + 1) as i64;
            for i in 0..=(n + 2) as i64 {
                for j in 0..=jhi {
                    for k in 0..=(n + 2) as i64 {
                        let lhs = target.get_signed(i, j, k);
                        let mid = match middle {
                            CnrMiddleFactor::JPlusOne => j + 1,
                            CnrMiddleFactor::JPlusR => j + i64::from(r),
                        };
                        let rhs = base.get_signed(i - 1, j - i64::from(r), k - 1)
                            + BigInt::from(mid) * base.get_signed(i, j - i64::from(r) + 1, k - 1)
                            + BigInt::from(k) * base.get_signed(i, j - i64::from(r), k);
                        item.record(lhs == rhs, || {
                            format!(
                                "r={r} step {n}->{} at ({i},{j},{k}): table {lhs}, recursion {rhs}",
                                n + 1
                            )
                        });
                    }
                }
            }
        }
    }
    report.push(item.finish());

    let mut item = ItemAcc::new("single-step product identity");
    let sys = ModeSystem::coupled(2);
    for r in 0..=r_max.min(3) {
        for i in 0..=2u32 {
            for j in 0..=2u32 {
                for k in 0..=2u32 {
                    // left side: (a+)^i b^j a^k b^r a+ a, normally ordered
                    let head = Monomial::new(alloc::vec![i, 0], alloc::vec![k, j]).to_word();
                    let tail = cnr_word(r, 1);
                    let lhs = normal_order_rewrite(&head.concat(&tail), &sys);
                    // right side:
                    //   (a+)^{i+1} b^{j+r} a^{k+1}
                    //   + (j+r) (a+)^i b^{j+r-1} a^{k+1}
                    //   + k (a+)^i b^{j+r} a^k
                    let mut rhs = NormalForm::zero(2);
                    rhs.add_term(
                        BigInt::one(),
                        Monomial::new(alloc::vec![i + 1, 0], alloc::vec![k + 1, j + r]),
                    );
                    if j + r > 0 {
                        rhs.add_term(
                            BigInt::from(j + r),
                            Monomial::new(alloc::vec![i, 0], alloc::vec![k + 1, j + r - 1]),
                        );
                    }
                    rhs.add_term(
                        BigInt::from(k),
                        Monomial::new(alloc::vec![i, 0], alloc::vec![k, j + r]),
                    );
                    item.record(lhs == rhs, || {
                        format!("r={r} at ({i},{j},{k}): sides differ")
                    });
                }
            }
        }
    }
    report.push(item.finish());

    report
}

/// A polynomial in three variables u, v, w with integer coefficients,
/// stored sparsely by exponent triple.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GenPolynomial {
    coeffs: BTreeMap<(u32, u32, u32), BigInt>,
}

/// One of the three polynomial variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    U,
    V,
    W,
}

impl GenPolynomial {
    pub fn zero() -> GenPolynomial {
        GenPolynomial::default()
    }

    pub fn one() -> GenPolynomial {
        let mut p = GenPolynomial::default();
        p.add_term(BigInt::one(), (0, 0, 0));
        p
    }

    pub fn add_term(&mut self, coeff: BigInt, exps: (u32, u32, u32)) {
        if coeff.is_zero() {
            return;
        }
        match self.coeffs.entry(exps) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn coeff(&self, exps: (u32, u32, u32)) -> BigInt {
        self.coeffs.get(&exps).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&(u32, u32, u32), &BigInt)> {
        self.coeffs.iter()
    }

    pub fn add(&self, other: &GenPolynomial) -> GenPolynomial {
        let mut out = self.clone();
        for (&e, c) in other.coeffs.iter() {
            out.add_term(c.clone(), e);
        }
        out
    }

    /// Partial derivative with respect to the given variable.
    pub fn diff(&self, var: Var) -> GenPolynomial {
        let mut out = GenPolynomial::zero();
        for (&(eu, ev, ew), c) in self.coeffs.iter() {
            let (e, rest) = match var {
                Var::U => (eu, (eu.wrapping_sub(1), ev, ew)),
                Var::V => (ev, (eu, ev.wrapping_sub(1), ew)),
                Var::W => (ew, (eu, ev, ew.wrapping_sub(1))),
            };
            if e > 0 {
                out.add_term(BigInt::from(e) * c, rest);
            }
        }
        out
    }

    /// Multiplication by the given variable.
    pub fn mul_var(&self, var: Var) -> GenPolynomial {
        let mut out = GenPolynomial::zero();
        for (&(eu, ev, ew), c) in self.coeffs.iter() {
            let e = match var {
                Var::U => (eu + 1, ev, ew),
                Var::V => (eu, ev + 1, ew),
                Var::W => (eu, ev, ew + 1),
            };
            out.add_term(c.clone(), e);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Rendering like `u^2 v w + 3 u w + 1`, highest exponents first.
    pub fn pretty(&self) -> String {
        use core::fmt::Write as _;
        if self.coeffs.is_empty() {
            return String::from("0");
        }
        let mut out = String::new();
        for (idx, (&(eu, ev, ew), c)) in self.coeffs.iter().rev().enumerate() {
            if idx > 0 {
                out.push_str(" + ");
            }
            let mut vars = String::new();
            for (name, e) in [("u", eu), ("v", ev), ("w", ew)] {
                if e == 1 {
                    let _ = write!(vars, "{name} ");
                } else if e > 1 {
                    let _ = write!(vars, "{name}^{e} ");
                }
            }
            let vars = vars.trim_end();
            if vars.is_empty() {
                let _ = write!(out, "{c}");
            } else if c.is_one() {
                out.push_str(vars);
            } else {
                let _ = write!(out, "{c} {vars}");
            }
        }
        out
    }
}

/// Builds the generating polynomial `sum S(i,j,k,l) u^i v^j w^k` of a
/// two-mode table. Fails if any entry has `i + j != k + l`, since then the
/// fourth index would not be recoverable from the exponents.
pub fn gen_polynomial(table: &StirlingTable) -> Result<GenPolynomial, String> {
    if table.modes() != 2 {
        return Err(format!(
            "generating polynomials need a two-mode table, got {} modes",
            table.modes()
        ));
    }
    let mut p = GenPolynomial::zero();
    for (idx, c) in table.entries() {
        let (i, j, k, l) = (idx[0], idx[1], idx[2], idx[3]);
        if i + j != k + l {
            return Err(format!(
                "entry ({i},{j},{k},{l}) breaks i + j = k + l; the polynomial would lose it"
            ));
        }
        p.add_term(c.clone(), (i, j, k));
    }
    Ok(p)
}

/// The three polynomial recurrences matching the table recursions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenRecurrence {
    /// `T -> u (1 + d/du + d/dv) T`, one more power of the first number
    /// operator.
    FirstExponentStep,
    /// `T -> w (v + u d/du + v d/dv + (1 - w) d/dw) T`, one more power of
    /// the second number operator.
    SecondExponentStep,
    /// `T -> u [w(v+1) + (vw+v+1)(d/du + d/dv) + v (d/du + d/dv)^2] T`, one
    /// more power of the product of both number operators.
    SecondTypeStep,
}

/// Applies one polynomial recurrence step.
pub fn apply_gen_recurrence(rec: GenRecurrence, p: &GenPolynomial) -> GenPolynomial {
    match rec {
        GenRecurrence::FirstExponentStep => {
            p.add(&p.diff(Var::U)).add(&p.diff(Var::V)).mul_var(Var::U)
        }
        GenRecurrence::SecondExponentStep => {
            let du = p.diff(Var::U);
            let dv = p.diff(Var::V);
            let dw = p.diff(Var::W);
            p.mul_var(Var::V)
                .add(&du.mul_var(Var::U))
                .add(&dv.mul_var(Var::V))
                .add(&dw)
                .add(&dw.mul_var(Var::W).neg_inline())
                .mul_var(Var::W)
        }
        GenRecurrence::SecondTypeStep => {
            let d1 = p.diff(Var::U).add(&p.diff(Var::V));
            let d2 = d1.diff(Var::U).add(&d1.diff(Var::V));
            let term1 = p.mul_var(Var::V).add(p).mul_var(Var::W);
            let term2 = d1
                .mul_var(Var::V)
                .mul_var(Var::W)
                .add(&d1.mul_var(Var::V))
                .add(&d1);
            let term3 = d2.mul_var(Var::V);
            term1.add(&term2).add(&term3).mul_var(Var::U)
        }
    }
}

impl GenPolynomial {
    fn neg_inline(&self) -> GenPolynomial {
        GenPolynomial {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

/// Compares the polynomial recurrences against generating polynomials of
/// computed tables. The two first-type steps are reported in two regimes:
/// the stated one where both base exponents are at least 1, and the
/// boundary one where a base exponent is 0.
pub fn check_gen_recurrences(na_max: u32, nb_max: u32, m_max: u32) -> CheckReport {
    let sys = ModeSystem::coupled(2);
    let mut first: BTreeMap<(u32, u32), GenPolynomial> = BTreeMap::new();
    for na in 0..=na_max {
        for nb in 0..=nb_max {
            let table = coloured_stirling_first(&sys, &[na, nb]);
            first.insert((na, nb), gen_polynomial(&table).unwrap());
        }
    }
    let second: Vec<GenPolynomial> = (0..=m_max)
        .map(|m| gen_polynomial(&coloured_stirling_second(&sys, m)).unwrap())
        .collect();

    let mut report = CheckReport::new();

    let mut initial = ItemAcc::new("initial values");
    let mut t11 = GenPolynomial::zero();
    t11.add_term(BigInt::one(), (1, 1, 1));
    t11.add_term(BigInt::one(), (1, 0, 1));
    initial.record(
        first[&(1.min(na_max), 1.min(nb_max))] == t11 || na_max < 1 || nb_max < 1,
        || String::from("T at exponents (1,1) is not u w (v + 1)"),
    );
    initial.record(second[0] == GenPolynomial::one(), || {
        String::from("second-type T at power 0 is not 1")
    });
    report.push(initial.finish());

    let mut stated = ItemAcc::new("first-exponent polynomial step, stated regime");
    let mut boundary = ItemAcc::new("first-exponent polynomial step, boundary regime");
    for na in 0..na_max {
        for nb in 0..=nb_max {
            let applied = apply_gen_recurrence(GenRecurrence::FirstExponentStep, &first[&(na, nb)]);
            let target = &first[&(na + 1, nb)];
            let ok = applied == *target;
            let item = if na >= 1 && nb >= 1 {
                &mut stated
            } else {
                &mut boundary
            };
            item.record(ok, || {
                format!(
                    "step ({na},{nb})->({},{nb}): recurrence gives {}, table gives {}",
                    na + 1,
                    applied.pretty(),
                    target.pretty()
                )
            });
        }
    }
    report.push(stated.finish());
    report.push(boundary.finish());

    let mut stated = ItemAcc::new("second-exponent polynomial step, stated regime");
    let mut boundary = ItemAcc::new("second-exponent polynomial step, boundary regime");
    for na in 0..=na_max {
        for nb in 0..nb_max {
            let applied =
                apply_gen_recurrence(GenRecurrence::SecondExponentStep, &first[&(na, nb)]);
            let target = &first[&(na, nb + 1)];
            let ok = applied == *target;
            let item = if na >= 1 && nb >= 1 {
                &mut stated
            } else {
                &mut boundary
            };
            item.record(ok, || {
                format!(
                    "step ({na},{nb})->({na},{}): recurrence gives {}, table gives {}",
                    nb + 1,
                    applied.pretty(),
                    target.pretty()
                )
            });
        }
    }
    report.push(stated.finish());
    report.push(boundary.finish());

    let mut item = ItemAcc::new("second-type polynomial step");
    for n in 0..m_max {
        let applied = apply_gen_recurrence(GenRecurrence::SecondTypeStep, &second[n as usize]);
        let target = &second[(n + 1) as usize];
        item.record(applied == *target, || {
            format!(
                "step {n}->{}: recurrence gives {}, table gives {}",
                n + 1,
                applied.pretty(),
                target.pretty()
            )
        });
    }
    report.push(item.finish());

    report
}
