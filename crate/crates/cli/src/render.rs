//! SVG rendering of a block of cells. Each flag is drawn as the triangle
//! (vertex, edge midpoint, face barycenter), filled by its orbit on the
//! one-cell torus; face outlines are drawn on top.

use std::collections::BTreeMap;
use std::fmt::Write;

use torus_atlas::geom::Vec2;
use torus_atlas::tiling::{atlas, Flag, TilingType};

const PALETTE: [&str; 12] = [
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948", "#b07aa1", "#ff9da7",
    "#9c755f", "#bab0ac", "#86bcb6", "#d37295",
];

const SCALE: f64 = 80.0;

/// Orbit colour index per cell flag, numbered by first appearance.
fn orbit_classes(t: TilingType) -> Vec<usize> {
    let a = atlas(t);
    let n = a.tiling.flags().len();
    let least: Vec<u32> = (0..n)
        .map(|i| a.perms.iter().map(|p| p[i]).min().unwrap())
        .collect();
    let mut ids: BTreeMap<u32, usize> = BTreeMap::new();
    let mut next = 0;
    for &l in &least {
        ids.entry(l).or_insert_with(|| {
            next += 1;
            next - 1
        });
    }
    least.iter().map(|l| ids[l]).collect()
}

pub fn svg(t: TilingType, cells: u32) -> String {
    let a = atlas(t);
    let tl = &a.tiling;
    let (ba, bb) = t.lattice_kind().euclidean_basis();
    let classes = orbit_classes(t);
    let pt = |v: &Vec2| {
        let (x, y) = v.to_f64(ba, bb);
        (x * SCALE, -y * SCALE)
    };

    let mut flags_svg = String::new();
    let mut faces_svg = String::new();
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for i in 0..cells as i64 {
        for j in 0..cells as i64 {
            for face in tl.faces() {
                let f = face.translate([i, j]);
                let n = f.size();
                for k in 0..n {
                    let (v, w) = (f.vertices[k], f.vertices[(k + 1) % n]);
                    let m = v.midpoint(&w);
                    for end in [v, w] {
                        let flag = Flag {
                            vertex: end,
                            edge_midpoint: m,
                            face_barycenter: f.barycenter,
                        };
                        let (idx, _) = tl.locate(&flag).expect("face flags are tiling flags");
                        let colour = PALETTE[classes[idx] % PALETTE.len()];
                        let pts: Vec<String> = [end, m, f.barycenter]
                            .iter()
                            .map(|p| {
                                let (x, y) = pt(p);
                                format!("{x:.3},{y:.3}")
                            })
                            .collect();
                        writeln!(
                            flags_svg,
                            r#"<polygon points="{}" fill="{colour}"/>"#,
                            pts.join(" ")
                        )
                        .unwrap();
                    }
                }
                let pts: Vec<String> = f
                    .vertices
                    .iter()
                    .map(|p| {
                        let (x, y) = pt(p);
                        xs.push(x);
                        ys.push(y);
                        format!("{x:.3},{y:.3}")
                    })
                    .collect();
                writeln!(faces_svg, r#"<polygon points="{}"/>"#, pts.join(" ")).unwrap();
            }
        }
    }
    let fold = |v: &[f64], f: fn(f64, f64) -> f64, init: f64| v.iter().copied().fold(init, f);
    let pad = 10.0;
    let (x0, x1) = (
        fold(&xs, f64::min, f64::INFINITY) - pad,
        fold(&xs, f64::max, f64::NEG_INFINITY) + pad,
    );
    let (y0, y1) = (
        fold(&ys, f64::min, f64::INFINITY) - pad,
        fold(&ys, f64::max, f64::NEG_INFINITY) + pad,
    );
    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{x0:.3} {y0:.3} {:.3} {:.3}" width="{:.0}" height="{:.0}">"#,
        x1 - x0,
        y1 - y0,
        x1 - x0,
        y1 - y0
    )
    .unwrap();
    writeln!(out, "<title>{t}: {} flag orbits</title>", a.plane_orbits).unwrap();
    writeln!(out, r#"<g stroke="none">"#).unwrap();
    out.push_str(&flags_svg);
    writeln!(out, "</g>").unwrap();
    writeln!(
        out,
        r##"<g fill="none" stroke="#222" stroke-width="1.5" stroke-linejoin="round">"##
    )
    .unwrap();
    out.push_str(&faces_svg);
    writeln!(out, "</g>").unwrap();
    writeln!(out, "</svg>").unwrap();
    out
}
