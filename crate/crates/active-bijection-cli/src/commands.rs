//! The four subcommands, as functions from parsed input to a [`Report`].

use std::fmt::Write as _;

use active_bijection::bijection::{alpha, alpha_refined, DeletionContraction};
use active_bijection::filtration::{active_filtration, PartKind};
use active_bijection::tutte::{
    convolution, tutte_by_filtrations, tutte_by_orientations, tutte_by_trees, TuttePoly,
};
use active_bijection::{Digraph, EdgeSet, OrderedGraph};

use crate::table::{build_table, render_json, render_text};
use crate::verify::{verify_batch, VerifyOptions};
use crate::{CliError, Report, EXIT_FAILURE, EXIT_OK};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Method {
    Trees,
    Orientations,
    Filtrations,
    Convolution,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Route {
    Decomposition,
    Dc,
    Both,
}

/// `x^2 + x + y`.
pub fn format_poly(p: &TuttePoly) -> String {
    p.to_string().replace('+', " + ")
}

fn coefficient_table(p: &TuttePoly) -> String {
    let imax = p.coeffs().keys().map(|k| k.0).max().unwrap_or(0);
    let jmax = p.coeffs().keys().map(|k| k.1).max().unwrap_or(0);
    let mut out = String::from("i\\j");
    for j in 0..=jmax {
        let _ = write!(out, " {j:>4}");
    }
    out.push('\n');
    for i in 0..=imax {
        let _ = write!(out, "{i:>3}");
        for j in 0..=jmax {
            let _ = write!(out, " {:>4}", p.coeff(i, j));
        }
        out.push('\n');
    }
    out
}

pub fn cmd_tutte(g: &OrderedGraph, method: Method) -> Result<Report, CliError> {
    let single = |p: TuttePoly| Report {
        text: format!("{}t = {}\n", coefficient_table(&p), format_poly(&p)),
        code: EXIT_OK,
    };
    Ok(match method {
        Method::Trees => single(tutte_by_trees(g)?),
        Method::Orientations => single(tutte_by_orientations(g)?),
        Method::Filtrations => single(tutte_by_filtrations(g)?),
        Method::Convolution => single(convolution(g)?),
        Method::All => {
            let t = tutte_by_trees(g)?;
            let others = [
                ("orientations", tutte_by_orientations(g)?),
                ("filtrations", tutte_by_filtrations(g)?),
                ("convolution", convolution(g)?),
            ];
            let mut text = coefficient_table(&t);
            let _ = writeln!(text, "trees: {}", format_poly(&t));
            let mut ok = true;
            for (name, p) in &others {
                let _ = writeln!(text, "{name}: {}", format_poly(p));
                ok &= *p == t;
            }
            let _ = writeln!(text, "{}", if ok { "PASS" } else { "FAIL" });
            Report {
                text,
                code: if ok { EXIT_OK } else { EXIT_FAILURE },
            }
        }
    })
}

/// Parses `1,3,4` or `{1,3,4}`. The empty string and `{}` give the empty set.
pub fn parse_edge_list(s: &str, g: &OrderedGraph) -> Result<EdgeSet, CliError> {
    let inner = s.trim().trim_start_matches('{').trim_end_matches('}');
    let mut out = EdgeSet::EMPTY;
    for tok in inner.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let r: usize = tok
            .parse()
            .map_err(|_| CliError::Input(format!("bad edge number {tok:?}")))?;
        let e = EdgeSet::from_ranks([r]).map_err(|e| CliError::Input(e.to_string()))?;
        if !e.is_subset(g.edges()) {
            return Err(CliError::Input(format!("edge {r} is not an edge of the graph")));
        }
        out |= e;
    }
    Ok(out)
}

fn braces(a: EdgeSet) -> String {
    format!("{a:?}")
}

pub fn cmd_alpha(
    reference: &Digraph,
    a: EdgeSet,
    refined: bool,
    route: Route,
) -> Result<Report, CliError> {
    let d = reference.reoriented(a);
    let mut engine = DeletionContraction::new(reference.graph());
    let mut text = String::new();
    let mut ok = true;
    let _ = writeln!(text, "reorientation: {}", braces(a));
    let f = active_filtration(&d)?;
    let parts: Vec<String> = f
        .parts()
        .parts
        .iter()
        .map(|p| format!("{}{}", p.edges, if p.kind == PartKind::Cyclic { "*" } else { "" }))
        .collect();
    let _ = writeln!(text, "filtration: {f}");
    let _ = writeln!(text, "partition: {}", parts.join("+"));
    let acts = d.activity_sets()?;
    let _ = writeln!(text, "O: {}", braces(acts.active));
    let _ = writeln!(text, "O*: {}", braces(acts.dual_active));

    let mut compare = |label: &str, first: Option<EdgeSet>, second: Option<EdgeSet>| {
        match (first, second) {
            (Some(x), Some(y)) if x != y => {
                let _ = writeln!(text, "{label}: MISMATCH decomposition {x} deletion/contraction {y}");
                ok = false;
            }
            (Some(x), _) | (None, Some(x)) => {
                let _ = writeln!(text, "{label}: {x}");
            }
            (None, None) => {}
        }
    };
    let use_dec = route != Route::Dc;
    let use_dc = route != Route::Decomposition;
    let tree_dec = if use_dec { Some(alpha(&d)?) } else { None };
    let tree_dc = if use_dc { Some(engine.alpha(&d)?) } else { None };
    compare("tree", tree_dec, tree_dc);
    if refined {
        let x_dec = if use_dec { Some(alpha_refined(reference, a)?) } else { None };
        let x_dc = if use_dc { Some(engine.alpha_refined(reference, a)?) } else { None };
        compare("refined", x_dec, x_dc);
    }
    Ok(Report {
        text,
        code: if ok { EXIT_OK } else { EXIT_FAILURE },
    })
}

pub fn cmd_table(g: &OrderedGraph, json: bool) -> Result<Report, CliError> {
    let rows = build_table(g)?;
    let mut text = if json { render_json(&rows) } else { render_text(&rows) };
    if !text.ends_with('\n') {
        text.push('\n');
    }
    Ok(Report {
        text,
        code: EXIT_OK,
    })
}

pub fn cmd_verify(graphs: &[OrderedGraph], opts: &VerifyOptions) -> Report {
    let summaries = verify_batch(graphs, opts);
    let mut text = String::new();
    let mut ok = true;
    for s in &summaries {
        ok &= s.passed();
        let _ = write!(
            text,
            "{} {}: {}/{} graphs",
            if s.passed() { "PASS" } else { "FAIL" },
            s.name,
            s.graphs - s.failed,
            s.graphs
        );
        if let Some((i, msg)) = &s.first_failure {
            let _ = write!(text, "; first failure on graph {i}: {msg}");
        }
        text.push('\n');
    }
    let _ = writeln!(text, "{}", if ok { "all checks passed" } else { "some checks failed" });
    Report {
        text,
        code: if ok { EXIT_OK } else { EXIT_FAILURE },
    }
}
