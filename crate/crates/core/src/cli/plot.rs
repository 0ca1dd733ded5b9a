//! SVG rendering of the region chain over rank-2 dominant weights.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::prime::Prime;
use crate::rootdatum::{GWeight, RegionLabel, RootDatum};

const SCALE: f64 = 14.0;
const MARGIN: f64 = 24.0;
const PALETTE: [&str; 8] = [
    "#4c72b0", "#dd8452", "#55a868", "#c44e52", "#8172b3", "#937860", "#da8bc3", "#8c8c8c",
];

/// Labels of every dominant weight with both coordinates `<= max`, in
/// lexicographic order.
pub fn region_grid(rd: &RootDatum, p: Prime, n: u32, max: u32) -> Result<BTreeMap<GWeight, RegionLabel>> {
    if rd.rank() != 2 {
        return Err(Error::RankMismatch { got: rd.rank(), rank: 2 });
    }
    let mut out = BTreeMap::new();
    for a in 0..=max as i64 {
        for b in 0..=max as i64 {
            let lam = GWeight(vec![a, b]);
            let label = rd.classify_region(&lam, p, n)?;
            out.insert(lam, label);
        }
    }
    Ok(out)
}

/// Planar positions of the fundamental weights, with the angle between
/// them taken from the invariant form and the picture symmetric about the
/// vertical axis.
fn fundamental_frame(rd: &RootDatum) -> [(f64, f64); 2] {
    // Gram matrix of ω_1, ω_2: with B_ij = d_i a_ij and ω = (Aᵀ)⁻¹ α,
    // G = N B Nᵀ for N = (Aᵀ)⁻¹. Products of rank-1 factors are orthogonal.
    let gram = if rd.components.len() == 1 {
        let c = &rd.components[0];
        let a = &c.cartan;
        let b: Vec<Vec<f64>> = (0..2)
            .map(|i| (0..2).map(|j| (c.symmetrizer[i] * a[i][j]) as f64).collect())
            .collect();
        let det = (a[0][0] * a[1][1] - a[0][1] * a[1][0]) as f64;
        // inverse of Aᵀ
        let n = [
            [a[1][1] as f64 / det, -a[1][0] as f64 / det],
            [-a[0][1] as f64 / det, a[0][0] as f64 / det],
        ];
        let mut g = [[0.0; 2]; 2];
        for (i, gi) in g.iter_mut().enumerate() {
            for (j, gij) in gi.iter_mut().enumerate() {
                for k in 0..2 {
                    for l in 0..2 {
                        *gij += n[i][k] * b[k][l] * n[j][l];
                    }
                }
            }
        }
        g
    } else {
        [[1.0, 0.0], [0.0, 1.0]]
    };
    let (l1, l2) = (gram[0][0].sqrt(), gram[1][1].sqrt());
    let phi = (gram[0][1] / (l1 * l2)).acos();
    let (t1, t2) = (std::f64::consts::FRAC_PI_2 - phi / 2.0, std::f64::consts::FRAC_PI_2 + phi / 2.0);
    // normalise so the longer fundamental weight has unit length
    let s = l1.max(l2);
    [
        (l1 / s * t1.cos(), l1 / s * t1.sin()),
        (l2 / s * t2.cos(), l2 / s * t2.sin()),
    ]
}

fn position(frame: &[(f64, f64); 2], a: f64, b: f64) -> (f64, f64) {
    (a * frame[0].0 + b * frame[1].0, a * frame[0].1 + b * frame[1].1)
}

/// Clips the line `k0 x + k1 y = c` to the box `[-1, max]²`.
fn clip(k: &[i64], c: i64, max: f64) -> Option<((f64, f64), (f64, f64))> {
    let (k0, k1, c) = (k[0] as f64, k[1] as f64, c as f64);
    let mut pts = Vec::new();
    for x in [-1.0, max] {
        if k1 != 0.0 {
            let y = (c - k0 * x) / k1;
            if (-1.0..=max).contains(&y) {
                pts.push((x, y));
            }
        }
    }
    for y in [-1.0, max] {
        if k0 != 0.0 {
            let x = (c - k1 * y) / k0;
            if (-1.0..=max).contains(&x) {
                pts.push((x, y));
            }
        }
    }
    pts.sort_by(|u, v| u.partial_cmp(v).unwrap());
    pts.dedup();
    match pts.as_slice() {
        [first, .., last] if first != last => Some((*first, *last)),
        _ => None,
    }
}

/// Renders the region labels of all dominant weights with coordinates
/// `<= max`, with the walls `⟨λ + ρ, α∨⟩ ∈ pℤ` drawn as gridlines.
pub fn region_svg(rd: &RootDatum, p: Prime, n: u32, max: u32) -> Result<String> {
    let grid = region_grid(rd, p, n, max)?;
    let frame = fundamental_frame(rd);
    let maxf = max as f64;

    let corners = [(-1.0, -1.0), (maxf, -1.0), (-1.0, maxf), (maxf, maxf)].map(|(a, b)| position(&frame, a, b));
    let min_x = corners.iter().map(|c| c.0).fold(f64::INFINITY, f64::min);
    let max_x = corners.iter().map(|c| c.0).fold(f64::NEG_INFINITY, f64::max);
    let min_y = corners.iter().map(|c| c.1).fold(f64::INFINITY, f64::min);
    let max_y = corners.iter().map(|c| c.1).fold(f64::NEG_INFINITY, f64::max);
    let legend_h = 20.0;
    let width = (max_x - min_x) * SCALE + 2.0 * MARGIN;
    let height = (max_y - min_y) * SCALE + 2.0 * MARGIN + legend_h;
    // y grows downwards in SVG
    let screen = |(x, y): (f64, f64)| ((x - min_x) * SCALE + MARGIN, (max_y - y) * SCALE + MARGIN + legend_h);

    let mut labels: Vec<RegionLabel> = grid.values().copied().collect();
    labels.sort_by_key(|l| rank_of(*l));
    labels.dedup();
    let colour = |l: RegionLabel| PALETTE[labels.iter().position(|&m| m == l).unwrap() % PALETTE.len()];

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.1}" height="{height:.1}" viewBox="0 0 {width:.1} {height:.1}">"#
    );
    let _ = writeln!(
        svg,
        r#"<title>{} p={} n={} weights up to {}</title>"#,
        rd.type_string(),
        p,
        n,
        max
    );
    let _ = writeln!(svg, r##"<rect width="100%" height="100%" fill="#ffffff"/>"##);

    let _ = writeln!(svg, r##"<g stroke="#999999" stroke-width="0.8">"##);
    let pi = p.get() as i64;
    for coroot in rd.positive_coroots() {
        let off = coroot.component.offset;
        let mut k = vec![0i64; 2];
        for (i, &c) in coroot.coords.iter().enumerate() {
            k[off + i] = c;
        }
        // ⟨λ + ρ, α∨⟩ = m p  ⟺  k·λ = m p - Σ k
        let shift: i64 = k.iter().sum();
        let top = (k.iter().sum::<i64>() * (max as i64 + 1)) / pi + 1;
        for m in 1..=top {
            if let Some((u, v)) = clip(&k, m * pi - shift, maxf) {
                let (x1, y1) = screen(position(&frame, u.0, u.1));
                let (x2, y2) = screen(position(&frame, v.0, v.1));
                let _ = writeln!(svg, r#"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}"/>"#);
            }
        }
    }
    let _ = writeln!(svg, "</g>");

    let _ = writeln!(svg, "<g>");
    for (lam, &label) in &grid {
        let (x, y) = screen(position(&frame, lam.0[0] as f64, lam.0[1] as f64));
        let _ = writeln!(
            svg,
            r#"<circle cx="{x:.2}" cy="{y:.2}" r="3" fill="{}" data-weight="{},{}" data-region="{}"/>"#,
            colour(label),
            lam.0[0],
            lam.0[1],
            label
        );
    }
    let _ = writeln!(svg, "</g>");

    let _ = writeln!(svg, r#"<g font-family="sans-serif" font-size="11">"#);
    for (i, &label) in labels.iter().enumerate() {
        let x = MARGIN + 90.0 * i as f64;
        let _ = writeln!(
            svg,
            r#"<circle cx="{:.1}" cy="{:.1}" r="4" fill="{}"/><text x="{:.1}" y="{:.1}">{}</text>"#,
            x,
            MARGIN - 4.0,
            colour(label),
            x + 8.0,
            MARGIN,
            label
        );
    }
    let _ = writeln!(svg, "</g>");
    svg.push_str("</svg>\n");
    Ok(svg)
}

/// Position of a label along the chain `A, I1\J2, J2\I2, I2\J3, ...`.
fn rank_of(l: RegionLabel) -> u32 {
    match l {
        RegionLabel::FundamentalAlcove => 0,
        RegionLabel::IOutsideJ(k) => 2 * k - 1,
        RegionLabel::JMinusI(k) => 2 * k - 2,
        RegionLabel::Ideal(k) => 2 * k - 1,
    }
}
