//! Chart emission: a structured model of one page of the spectral sequence
//! (nodes, differential arrows, hidden-extension lines) plus a deterministic
//! SVG rendering. Nodes sit at (total stem, −cell), so classes of one
//! classical stem line up on a diagonal and a d_r arrow moves one column
//! left and r rows up.

use serde::Serialize;
use stems::Catalog;

use crate::assemble::{link_map, stem_pieces};
use crate::page::Order;
use crate::run::{find_summand, RunOutcome};
use crate::rules::RuleStatus;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ChartKind {
    /// The page after the first differential, with every later differential
    /// drawn as an arrow.
    E2,
    /// The limit page, with undecided and withheld differentials dashed and
    /// hidden 3-extensions as dashed lines.
    EInfinity,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum NodeStyle {
    /// An order-3 class.
    Dot,
    /// A full 3-adic tower.
    Tower,
    /// A cyclic class of order 3^k, k ≥ 2, drawn hollow with its exponent.
    Hollow(u32),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Node {
    pub stem: i64,
    pub cell: i64,
    pub name: String,
    pub style: NodeStyle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ArrowStyle {
    Solid,
    Dashed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Arrow {
    pub page: u32,
    pub source: (i64, i64, String),
    pub target: (i64, i64, String),
    pub style: ArrowStyle,
    pub color: &'static str,
}

/// A hidden multiplication-by-3 extension between two limit classes of the
/// same stem.
pub type Extension = ((i64, i64, String), (i64, i64, String));

#[derive(Clone, Debug, Serialize)]
pub struct ChartModel {
    pub kind: ChartKind,
    pub smin: i64,
    pub smax: i64,
    pub nodes: Vec<Node>,
    pub arrows: Vec<Arrow>,
    pub extensions: Vec<Extension>,
}

fn page_color(page: u32) -> &'static str {
    match page {
        4 => "green",
        5 => "blue",
        8 => "red",
        9 => "orange",
        12 => "brown",
        13 => "magenta",
        17 | 24 => "cyan",
        _ => "black",
    }
}

/// Build the chart model of a run for stems `smin ..= smax` (a sub-window of
/// the run's), with an SVG rendering.
pub fn emit_chart(
    catalog: &Catalog,
    outcome: &RunOutcome,
    kind: ChartKind,
    smin: i64,
    smax: i64,
) -> (ChartModel, String) {
    let entries = match kind {
        ChartKind::E2 => outcome.state_at(2),
        ChartKind::EInfinity => outcome.e_infinity(),
    };

    let mut nodes = Vec::new();
    for s in smin..=smax {
        for p in stem_pieces(catalog, entries, s) {
            let style = match p.order {
                Order::Tower => NodeStyle::Tower,
                Order::Finite(1) => NodeStyle::Dot,
                Order::Finite(e) => NodeStyle::Hollow(e),
            };
            nodes.push(Node {
                stem: s,
                cell: p.cell,
                name: p.name,
                style,
            });
        }
    }

    let mut arrows = Vec::new();
    for r in &outcome.records {
        if r.page < 4 || r.source.stem < smin || r.source.stem > smax {
            continue;
        }
        let drawn = match kind {
            // Every later differential is drawn on the second page.
            ChartKind::E2 => true,
            // On the limit page only the withheld ones, between classes
            // still standing.
            ChartKind::EInfinity => {
                let src_alive = find_summand(
                    catalog,
                    entries,
                    r.source.cell,
                    r.source.stem,
                    &r.source.name,
                )
                .is_some();
                let tgt_alive = find_summand(
                    catalog,
                    entries,
                    r.target.cell,
                    r.target.stem,
                    &r.target.name,
                )
                .is_some();
                (r.status == RuleStatus::Potential || r.page == 17)
                    && src_alive
                    && tgt_alive
            }
        };
        if !drawn {
            continue;
        }
        // The reference charts dash every seventeenth-page arrow (decided or
        // not); everything else is solid.
        let style = if r.page == 17 {
            ArrowStyle::Dashed
        } else {
            ArrowStyle::Solid
        };
        arrows.push(Arrow {
            page: r.page,
            source: (r.source.cell, r.source.stem, r.source.name.clone()),
            target: (r.target.cell, r.target.stem, r.target.name.clone()),
            style,
            color: page_color(r.page),
        });
    }

    let mut extensions = Vec::new();
    if kind == ChartKind::EInfinity {
        for s in smin..=smax {
            let pieces = stem_pieces(catalog, entries, s);
            let next = link_map(&pieces, outcome.bottom);
            for (i, n) in next.iter().enumerate() {
                if let Some(j) = n {
                    extensions.push((
                        (pieces[i].cell, s, pieces[i].name.clone()),
                        (pieces[*j].cell, s, pieces[*j].name.clone()),
                    ));
                }
            }
        }
    }

    let model = ChartModel {
        kind,
        smin,
        smax,
        nodes,
        arrows,
        extensions,
    };
    let svg = render_svg(&model);
    (model, svg)
}

const SCALE: i64 = 36;

/// Chart coordinates: x grows with the stem, y downward with the cell (so
/// low cells sit high on the page, as in the reference charts).
fn xy(model: &ChartModel, stem: i64, cell: i64, ymax: i64) -> (i64, i64) {
    let x = (stem - model.smin) * SCALE + SCALE;
    let y = (ymax - (-cell)) * SCALE + SCALE;
    (x, y)
}

fn render_svg(model: &ChartModel) -> String {
    use std::fmt::Write;

    let ymax = model.nodes.iter().map(|n| -n.cell).max().unwrap_or(0);
    let ymin = model.nodes.iter().map(|n| -n.cell).min().unwrap_or(0);
    let width = (model.smax - model.smin + 2) * SCALE;
    let height = (ymax - ymin + 2) * SCALE;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        width, height, width, height
    );
    let _ = writeln!(
        s,
        r#"<style>text {{ font: 9px sans-serif; }} line.ext {{ stroke: gray; stroke-dasharray: 3 3; }}</style>"#
    );

    for a in &model.arrows {
        let (x1, y1) = xy(model, a.source.1, a.source.0, ymax);
        let (x2, y2) = xy(model, a.target.1, a.target.0, ymax);
        let dash = match a.style {
            ArrowStyle::Solid => "",
            ArrowStyle::Dashed => r#" stroke-dasharray="4 3""#,
        };
        let _ = writeln!(
            s,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{}"{}><title>d{}</title></line>"#,
            x1, y1, x2, y2, a.color, dash, a.page
        );
    }
    for e in &model.extensions {
        let (x1, y1) = xy(model, e.0 .1, e.0 .0, ymax);
        let (x2, y2) = xy(model, e.1 .1, e.1 .0, ymax);
        let _ = writeln!(
            s,
            r#"<line class="ext" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            x1, y1, x2, y2
        );
    }
    for n in &model.nodes {
        let (x, y) = xy(model, n.stem, n.cell, ymax);
        match n.style {
            NodeStyle::Dot => {
                let _ = writeln!(s, r#"<circle cx="{}" cy="{}" r="3" fill="black"/>"#, x, y);
            }
            NodeStyle::Tower => {
                let _ = writeln!(
                    s,
                    r#"<rect x="{}" y="{}" width="8" height="8" fill="black"/>"#,
                    x - 4,
                    y - 4
                );
            }
            NodeStyle::Hollow(e) => {
                let _ = writeln!(
                    s,
                    r#"<rect x="{}" y="{}" width="8" height="8" fill="none" stroke="black"/><text x="{}" y="{}">{}</text>"#,
                    x - 4,
                    y - 4,
                    x + 6,
                    y - 4,
                    e
                );
            }
        }
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}">{}[{}]</text>"#,
            x + 4,
            y + 10,
            n.name,
            n.cell
        );
    }
    s.push_str("</svg>\n");
    s
}
