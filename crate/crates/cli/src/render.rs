//! Aligned-text renderings of the JSON reports.

use parind_core::ext::Verdict;
use parind_core::report::{
    CoinvariantsReport, CosetsReport, ExtReport, FiltrationCommandReport, RootsReport,
    VerifyReport, WeylReport,
};
use std::fmt::Write;

fn word_name(word: &[usize]) -> String {
    if word.is_empty() {
        "e".to_string()
    } else {
        word.iter().map(|i| format!("s{i}")).collect()
    }
}

fn subset_name(s: &parind_core::Subset) -> String {
    s.display()
}

pub fn roots(rep: &RootsReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "rank {}  f {}  z_dim {}  dim G {}",
        rep.rank, rep.f, rep.z_dim, rep.dim_g
    );
    let _ = writeln!(out, "{:<16} {:>3}", "root", "d");
    for r in &rep.positive_roots {
        let name: Vec<String> = r
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| if c == 1 { format!("a{}", i + 1) } else { format!("{c}a{}", i + 1) })
            .collect();
        let _ = writeln!(out, "{:<16} {:>3}", name.join("+"), r.d);
    }
    out
}

pub fn weyl(rep: &WeylReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "order {}  longest length {}", rep.order, rep.longest_length);
    let _ = writeln!(out, "{:<14} {:>6} {:>5}", "w", "length", "d_w");
    for e in &rep.elements {
        let _ = writeln!(out, "{:<14} {:>6} {:>5}", word_name(&e.word), e.length, e.d_w);
    }
    out
}

pub fn cosets(rep: &CosetsReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "D_{{I,K}} for I = {}, K = {}  ({} cosets)",
        subset_name(&rep.i),
        subset_name(&rep.k),
        rep.cosets.len()
    );
    let _ = writeln!(out, "{:<14} {:>6} {:>5} {:>7}", "w", "length", "d_w", "degree");
    for e in &rep.cosets {
        let _ = writeln!(
            out,
            "{:<14} {:>6} {:>5} {:>7}",
            word_name(&e.word),
            e.length,
            e.d_w,
            e.degree
        );
    }
    out
}

pub fn filtration(rep: &FiltrationCommandReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "filtration for I = {}, K = {}  (height {}, mode {})",
        subset_name(&rep.i),
        subset_name(&rep.k),
        rep.height,
        rep.mode
    );
    for group in &rep.filtration {
        let _ = writeln!(out, "height {}", group.height);
        for p in &group.pieces {
            let _ = writeln!(
                out,
                "  w {:<12} shift {:>4}  delta {:<20} coinv_levi {:<8} ind_levi {}",
                word_name(&p.w),
                p.shift,
                p.delta.to_string(),
                subset_name(&p.coinv_levi),
                subset_name(&p.ind_levi)
            );
        }
    }
    out
}

pub fn coinvariants(rep: &CoinvariantsReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{} coinvariants for I = {}, K = {}",
        rep.command,
        subset_name(&rep.i),
        subset_name(&rep.k)
    );
    if let Some(chi) = &rep.chi {
        let _ = writeln!(out, "chi = {chi}");
    }
    for group in &rep.degrees {
        let _ = writeln!(out, "degree {}", group.degree);
        for s in &group.summands {
            let constituent = s
                .constituent
                .as_ref()
                .map(|c| {
                    format!(
                        "  Sp(base {}, ambient {})",
                        subset_name(&c.base),
                        subset_name(&c.ambient)
                    )
                })
                .unwrap_or_default();
            let _ = writeln!(
                out,
                "  w {:<12} ind_levi {:<8} character {}{}",
                word_name(&s.w),
                subset_name(&s.ind_levi),
                s.character,
                constituent
            );
        }
    }
    out
}

pub fn ext(rep: &ExtReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "Ext^{} prediction ({} mode) for I = {}, K = {}",
        rep.degree,
        rep.mode,
        subset_name(&rep.i),
        subset_name(&rep.k)
    );
    let _ = writeln!(out, "rule: {}", rep.prediction.rule);
    match &rep.prediction.verdict {
        Verdict::Vanishes => {
            let _ = writeln!(out, "verdict: vanishes");
        }
        Verdict::Dimension { dim } => {
            let _ = writeln!(out, "verdict: dimension {dim}");
        }
        Verdict::TransferredToLevi { transfer } => {
            let _ = writeln!(
                out,
                "verdict: transferred to the Levi {} in degree {}",
                subset_name(&transfer.levi),
                transfer.degree
            );
            if let Some((side, subset)) = &transfer.induced {
                let _ = writeln!(
                    out,
                    "  with the {} induced from {}",
                    match side {
                        parind_core::ext::Side::Source => "source",
                        parind_core::ext::Side::Target => "target",
                    },
                    subset_name(subset)
                );
            }
            if let Some(boundary) = &transfer.boundary {
                let _ = writeln!(out, "  four-term sequence with boundary summands:");
                for s in boundary {
                    let _ = writeln!(
                        out,
                        "    a{}: Hom over {} of {} -> {} (twist {})",
                        s.alpha,
                        subset_name(&s.levi),
                        s.domain,
                        s.codomain,
                        s.twist
                    );
                }
            }
        }
        Verdict::HomSum { summands } => {
            let _ = writeln!(out, "verdict: direct sum of {} Hom space(s)", summands.len());
            for s in summands {
                let _ = writeln!(
                    out,
                    "  a{}: Hom over {} of {} -> {} (twist {})",
                    s.alpha,
                    subset_name(&s.levi),
                    s.domain,
                    s.codomain,
                    s.twist
                );
            }
        }
        Verdict::NecessaryCondition { candidates } => {
            let _ = writeln!(out, "verdict: nonvanishing requires one of:");
            for c in candidates {
                let _ = writeln!(
                    out,
                    "  w {:<12} degree {}  character {}",
                    word_name(&c.word),
                    c.degree,
                    c.character
                );
            }
        }
        Verdict::Undetermined => {
            let _ = writeln!(out, "verdict: undetermined");
        }
    }
    out
}

pub fn verify(rep: &VerifyReport, color: bool) -> String {
    let mut out = String::new();
    for s in &rep.suites {
        let status = if s.passed { "PASS" } else { "FAIL" };
        let status = if color {
            if s.passed {
                format!("\x1b[32m{status}\x1b[0m")
            } else {
                format!("\x1b[31m{status}\x1b[0m")
            }
        } else {
            status.to_string()
        };
        let _ = writeln!(out, "{status} {:<10} ({} checks)", s.name, s.checks);
        if let Some(cx) = &s.counterexample {
            let _ = writeln!(out, "     counterexample: {cx}");
        }
    }
    let _ = writeln!(out, "{}", if rep.passed { "all suites passed" } else { "FAILED" });
    out
}
