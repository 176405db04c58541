//! The reproduction table: each line recomputes one reference value.

use std::sync::Arc;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::chartab::dixon_character_table;
use crate::constructions::{base_groups, family, sigma, Series, S3_GENERATORS};
use crate::depth::{ordinary_depth_with_tables, DepthReport};
use crate::error::Result;
use crate::graphs::verify_lemma;
use crate::perm::{class_fusion, PermGroup};

#[derive(Clone, Debug, Serialize)]
pub struct CheckLine {
    pub id: usize,
    pub name: String,
    pub pass: bool,
    pub detail: String,
    pub seconds: f64,
    pub limit_seconds: Option<u64>,
}

impl std::fmt::Display for CheckLine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{:>2} {} {} ({}; {:.2}s)",
            self.id,
            if self.pass { "PASS" } else { "FAIL" },
            self.name,
            self.detail,
            self.seconds
        )
    }
}

fn timed(
    id: usize,
    name: &str,
    limit: Option<u64>,
    check: impl FnOnce() -> Result<(bool, String)>,
) -> CheckLine {
    let start = Instant::now();
    let outcome = check();
    let elapsed = start.elapsed();
    let (mut pass, mut detail) = match outcome {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    if let Some(l) = limit {
        if elapsed > Duration::from_secs(l) {
            pass = false;
            detail.push_str(&format!(", over the {l}s limit"));
        }
    }
    CheckLine {
        id,
        name: name.into(),
        pass,
        detail,
        seconds: elapsed.as_secs_f64(),
        limit_seconds: limit,
    }
}

fn depth_of(g: &Arc<PermGroup>, h: &Arc<PermGroup>) -> Result<DepthReport> {
    let emb = class_fusion(g.clone(), h.clone())?;
    let tg = dixon_character_table(g)?;
    let th = dixon_character_table(h)?;
    ordinary_depth_with_tables(&emb, &tg, &th)
}

fn depth_check(report: &DepthReport, expected: usize) -> (bool, String) {
    (
        report.depth == expected,
        format!("depth {}, expected {expected}", report.depth),
    )
}

fn family_depth(series: Series, n: usize, cap: usize) -> Result<DepthReport> {
    let inst = family(series, n, cap)?;
    depth_of(&inst.g, &inst.h)
}

/// Runs lines 1 to 10; line 9 aggregates the matrix criterion over lines 1
/// to 7.
pub fn reproduce(cap: usize) -> Vec<CheckLine> {
    let b = base_groups();
    let s3 = Arc::new(
        PermGroup::from_cycle_notation(S3_GENERATORS, 4, cap).expect("S3 on four points"),
    );
    let mut reports: Vec<Option<DepthReport>> = Vec::new();
    let mut lines = Vec::new();
    let mut depth_line = |id: usize, name: &str, limit: u64, expected: usize, run: &dyn Fn() -> Result<DepthReport>| {
        let mut report = None;
        let line = timed(id, name, Some(limit), || {
            let r = run()?;
            let out = depth_check(&r, expected);
            report = Some(r);
            Ok(out)
        });
        reports.push(report);
        line
    };

    let pairs: [(&str, Arc<PermGroup>, usize); 3] = [
        ("d(V4, S4) = 2", b.v4.clone(), 2),
        ("d(D8, S4) = 4", b.d8.clone(), 4),
        ("d(S3, S4) = 5", s3, 5),
    ];
    for (i, (name, h, expected)) in pairs.into_iter().enumerate() {
        lines.push(depth_line(i + 1, name, 1, expected, &|| depth_of(&b.s4, &h)));
    }
    let fams = [
        (4, "d(V4 x S4, S4 wr C2) = 4", Series::A, 2, 4, 30),
        (5, "d(D8 x S4, S4 wr C2) = 8", Series::B, 2, 8, 30),
        (6, "d(V4 x S4 x S4, S4 wr C3) = 6", Series::A, 3, 6, 300),
        (7, "d(D8 x S4 x S4, S4 wr C3) = 12", Series::B, 3, 12, 300),
    ];
    for (id, name, series, n, expected, limit) in fams {
        lines.push(depth_line(id, name, limit, expected, &|| {
            family_depth(series, n, cap)
        }));
    }

    lines.push(timed(8, "lemma parts (i)-(v) for n = 2, 3", None, || {
        let mut details = Vec::new();
        let mut pass = true;
        for n in [2, 3] {
            let r = verify_lemma(n, cap, None)?;
            pass &= r.all_pass();
            let failed: Vec<&str> = r.parts.iter().filter(|p| !p.pass).map(|p| p.part).collect();
            details.push(format!(
                "n={n}: d(alpha,omega)={}, Gamma distance {}{}",
                r.alpha_omega_distance,
                r.gamma_distance,
                if failed.is_empty() {
                    String::new()
                } else {
                    format!(", failed {}", failed.join(","))
                }
            ));
        }
        Ok((pass, details.join("; ")))
    }));

    lines.push(timed(9, "matrix criterion agrees on lines 1-7", None, || {
        let mut bad = Vec::new();
        for (k, r) in reports.iter().enumerate() {
            match r {
                Some(r) if r.matrix_depth.depth == r.depth => {}
                Some(r) => bad.push(format!("line {}: {} vs {}", k + 1, r.matrix_depth.depth, r.depth)),
                None => bad.push(format!("line {}: no report", k + 1)),
            }
        }
        Ok(if bad.is_empty() {
            (true, format!("{} pairs agree", reports.len()))
        } else {
            (false, bad.join("; "))
        })
    }));

    lines.push(timed(10, "core bound 2n is attained for series A, n = 2, 3", None, || {
        let mut details = Vec::new();
        let mut pass = true;
        for (n, line) in [(2usize, 4usize), (3, 6)] {
            let Some(r) = &reports[line - 1] else {
                return Ok((false, format!("line {line} has no report")));
            };
            let cb = &r.core_bound;
            let s = sigma(n)?;
            let powers: Vec<String> = (0..cb.m as u64).map(|i| s.pow(i).to_string()).collect();
            pass &= cb.m <= n && cb.witnesses == powers && r.depth == 2 * n && cb.bound == r.depth;
            details.push(format!("n={n}: m={}, bound {}, depth {}", cb.m, cb.bound, r.depth));
        }
        Ok((pass, details.join("; ")))
    }));
    lines
}
