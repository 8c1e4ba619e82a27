//! The emitted chart models of the two wedge summands over bottom cell -16,
//! on the second page and on the limit page, compared node-for-node and
//! arrow-for-arrow against the frozen reference charts.

use ahss::{
    build_e1, emit_chart, lowest_cell, rule_differentials, run_pages, ArrowStyle, ChartKind,
    ChartModel, NodeStyle, RunOutcome, SeventeenPolicy,
};
use lens::{Flavor, StuntedLens};
use serde::Deserialize;
use stems::Catalog;

#[derive(Deserialize)]
struct Fig {
    kind: String,
    flavor: String,
    bottom: i64,
    smin: i64,
    smax: i64,
    /// `[cell, name, e]` with e = 0 a tower, 1 a dot, k >= 2 hollow of order 3^k.
    nodes: Vec<(i64, String, u32)>,
    /// `[page, source name, source cell, target name, target cell, style]`.
    arrows: Vec<(u32, String, i64, String, i64, String)>,
    /// `[upper cell, upper name, lower cell, lower name]`.
    extensions: Vec<(i64, String, i64, String)>,
}

fn fixture(text: &str) -> Fig {
    serde_json::from_str(text).expect("figure fixture")
}

fn run_over(bottom: i64, flavor: Flavor, smax: i64) -> (Catalog, RunOutcome) {
    let catalog = Catalog::bundled();
    let complex = StuntedLens::infinite_above(bottom, flavor);
    let smin = lowest_cell(&complex).unwrap();
    let e1 = build_e1(&complex, &catalog, smin, smax).unwrap();
    let records = rule_differentials(&complex, &catalog, &e1).unwrap();
    let out = run_pages(&complex, &catalog, &e1, &records, SeventeenPolicy::DeferAll).unwrap();
    (catalog, out)
}

fn node_keys_of_model(m: &ChartModel) -> Vec<String> {
    let mut v: Vec<String> = m
        .nodes
        .iter()
        .map(|n| {
            let e = match n.style {
                NodeStyle::Tower => 0,
                NodeStyle::Dot => 1,
                NodeStyle::Hollow(e) => e,
            };
            format!("{}[{}] order exp {}", n.name, n.cell, e)
        })
        .collect();
    v.sort();
    v
}

fn node_keys_of_fig(f: &Fig) -> Vec<String> {
    let mut v: Vec<String> = f
        .nodes
        .iter()
        .map(|(cell, name, e)| format!("{}[{}] order exp {}", name, cell, e))
        .collect();
    v.sort();
    v
}

fn arrow_keys_of_model(m: &ChartModel) -> Vec<String> {
    let mut v: Vec<String> = m
        .arrows
        .iter()
        .map(|a| {
            let style = match a.style {
                ArrowStyle::Solid => "solid",
                ArrowStyle::Dashed => "dashed",
            };
            format!(
                "d{} {}[{}] -> {}[{}] {}",
                a.page, a.source.2, a.source.0, a.target.2, a.target.0, style
            )
        })
        .collect();
    v.sort();
    v
}

fn arrow_keys_of_fig(f: &Fig) -> Vec<String> {
    let mut v: Vec<String> = f
        .arrows
        .iter()
        .map(|(page, sn, sc, tn, tc, style)| {
            format!("d{} {}[{}] -> {}[{}] {}", page, sn, sc, tn, tc, style)
        })
        .collect();
    v.sort();
    v
}

fn ext_keys_of_model(m: &ChartModel) -> Vec<String> {
    let mut v: Vec<String> = m
        .extensions
        .iter()
        .map(|(from, to)| format!("{}[{}] -> {}[{}]", from.2, from.0, to.2, to.0))
        .collect();
    v.sort();
    v
}

fn ext_keys_of_fig(f: &Fig) -> Vec<String> {
    let mut v: Vec<String> = f
        .extensions
        .iter()
        .map(|(fc, fname, tc, tname)| format!("{}[{}] -> {}[{}]", fname, fc, tname, tc))
        .collect();
    v.sort();
    v
}

fn diff(kind: &str, got: &[String], want: &[String]) -> String {
    let extra: Vec<&String> = got.iter().filter(|k| !want.contains(k)).collect();
    let missing: Vec<&String> = want.iter().filter(|k| !got.contains(k)).collect();
    if extra.is_empty() && missing.is_empty() {
        String::new()
    } else {
        format!("{}: extra {:?}, missing {:?}\n", kind, extra, missing)
    }
}

fn check(fig_text: &str) {
    let fig = fixture(fig_text);
    let flavor = match fig.flavor.as_str() {
        "BSigma3" => Flavor::BSigma3,
        "X" => Flavor::X,
        other => panic!("unknown flavor {other}"),
    };
    let kind = match fig.kind.as_str() {
        "E2" => ChartKind::E2,
        "EInfinity" => ChartKind::EInfinity,
        other => panic!("unknown kind {other}"),
    };
    // One run covers both charts; the window may be a sub-range of it.
    let (catalog, out) = run_over(fig.bottom, flavor, 21);
    let (model, svg) = emit_chart(&catalog, &out, kind, fig.smin, fig.smax);

    let mut report = String::new();
    report += &diff("nodes", &node_keys_of_model(&model), &node_keys_of_fig(&fig));
    report += &diff(
        "arrows",
        &arrow_keys_of_model(&model),
        &arrow_keys_of_fig(&fig),
    );
    report += &diff(
        "extensions",
        &ext_keys_of_model(&model),
        &ext_keys_of_fig(&fig),
    );
    assert!(report.is_empty(), "chart differs from reference:\n{report}");

    // The rendering carries one marker per node: dots are circles, towers
    // and hollow classes rectangles.
    let dots = fig.nodes.iter().filter(|(_, _, e)| *e == 1).count();
    let rects = fig.nodes.len() - dots;
    assert_eq!(svg.matches("<circle").count(), dots);
    assert_eq!(svg.matches("<rect").count(), rects);
}

#[test]
fn second_page_of_the_even_summand_matches_the_reference() {
    check(include_str!("../fixtures/fig_e2_bsigma3.json"));
}

#[test]
fn second_page_of_the_odd_summand_matches_the_reference() {
    check(include_str!("../fixtures/fig_e2_x.json"));
}

#[test]
fn limit_page_of_the_even_summand_matches_the_reference() {
    check(include_str!("../fixtures/fig_einf_bsigma3.json"));
}

#[test]
fn limit_page_of_the_odd_summand_matches_the_reference() {
    check(include_str!("../fixtures/fig_einf_x.json"));
}
