//! The cross-validation suite behind `gpjac verify`: every route that can
//! compute a quantity is run against every other, and all anchored reference
//! rows are recomputed.

use gpjac::{
    companion_matrix, jacobian_via_companion, jacobian_via_laplacian, laplacian_symbol,
    reduced_shift, reference, tau_closed, tau_kirchhoff, tau_resultant,
    tau_resultant_with_symbol, AbelianGroup, LaurentPoly,
};
use num_bigint::{BigInt, BigUint};

/// Outcome of one named check.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn pass(name: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            passed: true,
            detail: String::new(),
        }
    }

    fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            passed: false,
            detail: detail.into(),
        }
    }
}

/// All check outcomes from one `verify` run.
#[derive(Debug, Default)]
pub struct Report {
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count()
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            if c.passed {
                out.push_str(&format!("ok   {}\n", c.name));
            } else {
                out.push_str(&format!("FAIL {}: {}\n", c.name, c.detail));
            }
        }
        let total = self.checks.len();
        let failures = self.failures();
        if failures == 0 {
            out.push_str(&format!("all {total} checks passed\n"));
        } else {
            out.push_str(&format!("{failures} of {total} checks failed\n"));
        }
        out
    }
}

/// Compare the resultant route, fed an arbitrary symbol, against the
/// matrix-tree count. This is the comparator that must catch a corrupted
/// symbol: a wrong polynomial either breaks the exact division or yields a
/// different count.
pub fn check_symbol_against_kirchhoff(n: u64, k: u64, symbol: &LaurentPoly) -> CheckResult {
    let name = format!("theorem1 vs kirchhoff GP({n},{k})");
    let honest = match tau_kirchhoff(n, k) {
        Ok(v) => v,
        Err(e) => return CheckResult::fail(name, format!("kirchhoff failed: {e}")),
    };
    match tau_resultant_with_symbol(n, k, symbol) {
        Ok(v) if v == honest => CheckResult::pass(name),
        Ok(v) => CheckResult::fail(name, format!("theorem1 gave {v}, kirchhoff gave {honest}")),
        Err(e) => CheckResult::fail(name, format!("theorem1 failed: {e}")),
    }
}

fn grid(n_max: u64) -> Vec<(u64, u64)> {
    let mut cells = Vec::new();
    for n in 3..=n_max {
        for k in 1..n {
            cells.push((n, k));
        }
    }
    cells
}

/// Jacobian routes agree cell-by-cell.
fn check_jacobian_routes(n_max: u64) -> Vec<CheckResult> {
    grid(n_max)
        .into_iter()
        .map(|(n, k)| {
            let name = format!("jacobian laplacian vs companion GP({n},{k})");
            match (jacobian_via_laplacian(n, k), jacobian_via_companion(n, k)) {
                (Ok(a), Ok(b)) if a == b => CheckResult::pass(name),
                (Ok(a), Ok(b)) => CheckResult::fail(name, format!("{a} vs {b}")),
                (Err(e), _) | (_, Err(e)) => CheckResult::fail(name, e.to_string()),
            }
        })
        .collect()
}

/// Matrix-tree, resultant, and (when available) closed-form counts agree,
/// and each equals the Jacobian group order.
fn check_tau_routes(n_max: u64) -> Vec<CheckResult> {
    grid(n_max)
        .into_iter()
        .map(|(n, k)| {
            let name = format!("tau methods GP({n},{k})");
            let kirchhoff = match tau_kirchhoff(n, k) {
                Ok(v) => v,
                Err(e) => return CheckResult::fail(name, format!("kirchhoff: {e}")),
            };
            match tau_resultant(n, k) {
                Ok(v) if v == kirchhoff => {}
                Ok(v) => {
                    return CheckResult::fail(name, format!("theorem1 {v} != kirchhoff {kirchhoff}"))
                }
                Err(e) => return CheckResult::fail(name, format!("theorem1: {e}")),
            }
            if reduced_shift(n, k).map(|kp| kp <= 4).unwrap_or(false) {
                match tau_closed(n, k) {
                    Ok(v) if v == kirchhoff => {}
                    Ok(v) => {
                        return CheckResult::fail(
                            name,
                            format!("closed {v} != kirchhoff {kirchhoff}"),
                        )
                    }
                    Err(e) => return CheckResult::fail(name, format!("closed: {e}")),
                }
            }
            match jacobian_via_companion(n, k) {
                Ok(g) if g.torsion_order() == kirchhoff => CheckResult::pass(name),
                Ok(g) => CheckResult::fail(
                    name,
                    format!("group order {} != tau {kirchhoff}", g.torsion_order()),
                ),
                Err(e) => CheckResult::fail(name, format!("jacobian: {e}")),
            }
        })
        .collect()
}

/// Anchored reference rows: recompute the group and the count.
fn check_reference_rows(n_max: u64) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for table in reference::tables() {
        for r in table.iter().filter(|r| r.n <= n_max) {
            let name = format!("anchored GP({},{})", r.n, r.k);
            let orders: Vec<BigUint> = r.factors.iter().map(|&f| BigUint::from(f)).collect();
            let expected_group = AbelianGroup::from_cyclic_orders(&orders);
            let group = match jacobian_via_companion(r.n, r.k) {
                Ok(g) => g,
                Err(e) => {
                    out.push(CheckResult::fail(name, format!("jacobian: {e}")));
                    continue;
                }
            };
            if group != expected_group {
                out.push(CheckResult::fail(
                    name,
                    format!("group {group} != anchored {expected_group}"),
                ));
                continue;
            }
            match tau_resultant(r.n, r.k) {
                Ok(v) if v == BigUint::from(r.tau) => out.push(CheckResult::pass(name)),
                Ok(v) => out.push(CheckResult::fail(
                    name,
                    format!("tau {v} != anchored {}", r.tau),
                )),
                Err(e) => out.push(CheckResult::fail(name, format!("tau: {e}"))),
            }
        }
    }
    out
}

/// Structural facts about the symbol and its companion matrix.
fn check_symbol_structure() -> Vec<CheckResult> {
    let mut out = Vec::new();
    for k in 1..=6u64 {
        let name = format!("symbol structure k = {k}");
        let p = laplacian_symbol(k);
        if !p.is_palindromic() || !p.is_bimonic() {
            out.push(CheckResult::fail(name, "symbol not palindromic/bimonic"));
            continue;
        }
        match companion_matrix(&p).and_then(|a| a.det_bareiss()) {
            Ok(d) if d == BigInt::from(1) => out.push(CheckResult::pass(name)),
            Ok(d) => out.push(CheckResult::fail(name, format!("companion det {d} != 1"))),
            Err(e) => out.push(CheckResult::fail(name, e.to_string())),
        }
    }
    out
}

/// Run the whole suite. The cross-route grid covers n up to
/// min(n_max, 12); anchored rows are checked up to n_max.
pub fn run(n_max: u64) -> Report {
    let grid_max = n_max.min(12);
    let mut checks = Vec::new();
    checks.extend(check_symbol_structure());
    checks.extend(check_jacobian_routes(grid_max));
    checks.extend(check_tau_routes(grid_max));
    checks.extend(check_reference_rows(n_max));
    Report { checks }
}
