//! Static SVG and TikZ pictures of Newton polygons.

use std::fmt::Write;

use dicritical_core::polygon::{hull_vertices, PencilPoly};

const SCALE: u32 = 40;
const MARGIN: u32 = 30;

/// Lattice data of one polygon.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolygonPicture {
    pub support: Vec<(u32, u32)>,
    pub vertices: Vec<(u32, u32)>,
    /// Vertex `(c, 0)` carrying `T`, if any.
    pub t_vertex: Option<(u32, u32)>,
}

impl PolygonPicture {
    pub fn from_pencil(p: &PencilPoly) -> Self {
        let support: Vec<(u32, u32)> = p.terms().keys().copied().collect();
        let vertices = hull_vertices(&support);
        let t_vertex = vertices.iter().copied().find(|&(i, j)| j == 0 && !p.coeff(i, j).b.is_zero());
        PolygonPicture { support, vertices, t_vertex }
    }

    fn extent(&self) -> (u32, u32) {
        let w = self.support.iter().map(|p| p.0).max().unwrap_or(0) + 1;
        let h = self.support.iter().map(|p| p.1).max().unwrap_or(0) + 1;
        (w, h)
    }
}

fn px(i: u32) -> u32 {
    MARGIN + i * SCALE
}

fn py(j: u32, h: u32) -> u32 {
    MARGIN + (h - j) * SCALE
}

pub fn render_polygon_svg(pic: &PolygonPicture) -> String {
    let (w, h) = pic.extent();
    let mut s = String::new();
    let (width, height) = (2 * MARGIN + w * SCALE, 2 * MARGIN + h * SCALE);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(s, r##"<g stroke="#cccccc" stroke-width="1">"##);
    for i in 0..=w {
        let _ = writeln!(s, r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, px(i), py(0, h), px(i), py(h, h));
    }
    for j in 0..=h {
        let _ = writeln!(s, r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, px(0), py(j, h), px(w), py(j, h));
    }
    let _ = writeln!(s, "</g>");
    if let (Some(first), Some(last)) = (pic.vertices.first(), pic.vertices.last()) {
        let mut region = vec![(first.0, h), (w, h), (w, last.1)];
        region.extend(pic.vertices.iter().rev().copied());
        let pts: Vec<String> = region.iter().map(|&(i, j)| format!("{},{}", px(i), py(j, h))).collect();
        let _ = writeln!(s, r##"<polygon points="{}" fill="#e6e6e6" stroke="none"/>"##, pts.join(" "));
        let hull: Vec<String> = pic.vertices.iter().map(|&(i, j)| format!("{},{}", px(i), py(j, h))).collect();
        let _ = writeln!(s, r##"<polyline points="{}" fill="none" stroke="#000000" stroke-width="3"/>"##, hull.join(" "));
    }
    for &(i, j) in &pic.support {
        let _ = writeln!(s, r##"<circle cx="{}" cy="{}" r="4" fill="#000000"/>"##, px(i), py(j, h));
    }
    if let Some((i, j)) = pic.t_vertex {
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" font-family="serif" font-size="16" text-anchor="middle">T</text>"#,
            px(i),
            py(j, h) + 22
        );
    }
    s.push_str("</svg>\n");
    s
}

pub fn render_polygon_tikz(pic: &PolygonPicture) -> String {
    let (w, h) = pic.extent();
    let mut s = String::from("\\begin{tikzpicture}[scale=0.5]\n");
    let _ = writeln!(s, "\\draw[very thin, gray!40] (0,0) grid ({w},{h});");
    if let (Some(first), Some(last)) = (pic.vertices.first(), pic.vertices.last()) {
        let mut region = vec![(first.0, h), (w, h), (w, last.1)];
        region.extend(pic.vertices.iter().rev().copied());
        let pts: Vec<String> = region.iter().map(|(i, j)| format!("({i},{j})")).collect();
        let _ = writeln!(s, "\\fill[gray!20] {} -- cycle;", pts.join(" -- "));
        let hull: Vec<String> = pic.vertices.iter().map(|(i, j)| format!("({i},{j})")).collect();
        if hull.len() > 1 {
            let _ = writeln!(s, "\\draw[ultra thick] {};", hull.join(" -- "));
        }
    }
    for (i, j) in &pic.support {
        let _ = writeln!(s, "\\fill ({i},{j}) circle (3pt);");
    }
    if let Some((i, j)) = pic.t_vertex {
        let _ = writeln!(s, "\\node[below] at ({i},{j}) {{$T$}};");
    }
    s.push_str("\\end{tikzpicture}\n");
    s
}
