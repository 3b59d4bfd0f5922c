//! SVG drawings of embeddings: the planarization placed by barycentric
//! relaxation inside a convex outer face.

use std::fmt::Write;

use fancross::embedding::{NodeKind, Planarization};
use fancross::Embedding;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const SIZE: f64 = 800.0;
const MARGIN: f64 = 40.0;
const ATTEMPTS: u64 = 8;

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum RenderError {
    #[error("embedding is invalid")]
    Invalid,
    #[error("layout stays degenerate after {0} attempts")]
    Degenerate(u64),
}

/// Node positions of the planarization; the first attempt uses unit
/// weights, later ones random weights drawn from `seed`.
pub fn layout(e: &Embedding, seed: u64) -> Result<(Planarization, Vec<(f64, f64)>), RenderError> {
    let p = e.planarize().map_err(|_| RenderError::Invalid)?;
    for attempt in 0..ATTEMPTS {
        let mut rng = StdRng::seed_from_u64(seed.wrapping_add(attempt));
        let weights: Vec<f64> =
            (0..p.segment_count()).map(|_| if attempt == 0 { 1.0 } else { rng.random_range(0.5..2.0) }).collect();
        let pos = relax(&p, &weights);
        if !degenerate(&pos) {
            return Ok((p, pos));
        }
    }
    Err(RenderError::Degenerate(ATTEMPTS))
}

fn relax(p: &Planarization, weights: &[f64]) -> Vec<(f64, f64)> {
    let nn = p.node_count();
    let mut pos = vec![(0.0, 0.0); nn];
    let mut fixed = vec![false; nn];
    let mut ring: Vec<usize> = Vec::new();
    for &d in &p.faces[p.outer_face] {
        let x = p.origin[d];
        if !ring.contains(&x) {
            ring.push(x);
        }
    }
    let k = ring.len() as f64;
    for (i, &x) in ring.iter().enumerate() {
        let a = std::f64::consts::TAU * i as f64 / k;
        pos[x] = (a.cos(), a.sin());
        fixed[x] = true;
    }
    for _ in 0..20_000 {
        let mut change: f64 = 0.0;
        for x in 0..nn {
            if fixed[x] || p.node_darts[x].is_empty() {
                continue;
            }
            let (mut sx, mut sy, mut sw) = (0.0, 0.0, 0.0);
            for &d in &p.node_darts[x] {
                let w = weights[d / 2];
                let (yx, yy) = pos[p.target(d)];
                sx += w * yx;
                sy += w * yy;
                sw += w;
            }
            let next = (sx / sw, sy / sw);
            change = change.max((next.0 - pos[x].0).abs() + (next.1 - pos[x].1).abs());
            pos[x] = next;
        }
        if change < 1e-12 {
            break;
        }
    }
    pos
}

fn degenerate(pos: &[(f64, f64)]) -> bool {
    (0..pos.len()).any(|i| (i + 1..pos.len()).any(|j| (pos[i].0 - pos[j].0).hypot(pos[i].1 - pos[j].1) < 1e-6))
}

/// Deterministic SVG: one polyline per edge through its crossing points,
/// a mark per crossing and a labelled disk per vertex.
pub fn render_svg(e: &Embedding, seed: u64) -> Result<String, RenderError> {
    let (p, pos) = layout(e, seed)?;
    let scale = (SIZE - 2.0 * MARGIN) / 2.0;
    let at = |x: usize| (MARGIN + (pos[x].0 + 1.0) * scale, MARGIN + (1.0 - pos[x].1) * scale);
    let mut s = String::new();
    writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {SIZE} {SIZE}" width="{SIZE}" height="{SIZE}">"#)
        .unwrap();
    writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    for ed in 0..e.m() {
        let first = p.seg_start[ed];
        let mut nodes = vec![p.origin[2 * first]];
        for g in first..first + e.crossings[ed].len() + 1 {
            nodes.push(p.origin[2 * g + 1]);
        }
        let points: Vec<String> = nodes
            .iter()
            .map(|&x| {
                let (a, b) = at(x);
                format!("{a:.2},{b:.2}")
            })
            .collect();
        let hue = (ed * 137) % 360;
        let (u, v) = e.graph.edges[ed];
        writeln!(
            s,
            r#"<polyline class="edge" data-edge="{ed}" data-ends="{u} {v}" points="{}" fill="none" stroke="hsl({hue},60%,40%)" stroke-width="2"/>"#,
            points.join(" ")
        )
        .unwrap();
    }
    for x in 0..p.node_count() {
        if let NodeKind::Cross(a, b) = p.nodes[x] {
            let (cx, cy) = at(x);
            writeln!(
                s,
                r#"<circle class="crossing" data-edges="{a} {b}" cx="{cx:.2}" cy="{cy:.2}" r="3" fill="black"/>"#
            )
            .unwrap();
        }
    }
    for v in 0..e.n() {
        let (cx, cy) = at(v);
        writeln!(
            s,
            r#"<circle class="vertex" cx="{cx:.2}" cy="{cy:.2}" r="10" fill="white" stroke="black" stroke-width="1.5"/>"#
        )
        .unwrap();
        writeln!(
            s,
            r#"<text x="{cx:.2}" y="{:.2}" font-size="11" text-anchor="middle" font-family="sans-serif">{v}</text>"#,
            cy + 4.0
        )
        .unwrap();
    }
    s.push_str("</svg>\n");
    Ok(s)
}
