//! Standalone SVG 1.1 figures: reordered adjacency matrix, `K_nn(k)` log-log
//! scatter, and the degree vs super-peer-degree scatter.
//!
//! Documents are assembled from rects, circles, lines and text with all
//! coordinates printed at two decimals, so output is byte-stable. Styling is
//! carried by class names resolved in an embedded `<style>` block.

use std::fmt::Write as _;

use crate::correlation::DegreeCorrelationTable;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::superpeer::ProfileEntry;

pub const DEFAULT_MAX_RENDERABLE: usize = 1000;
pub const DEFAULT_REFERENCE_X: f64 = 8.0;

/// Light-to-dark ramp indexed by `ramp_level`: high-degree rows are drawn darker.
const RAMP: [&str; 5] = ["#ffc640", "#f07f00", "#c23b00", "#7a0d00", "#2b0000"];

struct Svg {
    out: String,
}

impl Svg {
    fn new(width: f64, height: f64, style: &str) -> Svg {
        let mut out = String::new();
        out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        let _ = writeln!(
            out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">",
            w = num(width),
            h = num(height)
        );
        let _ = writeln!(out, "<style>{style}</style>");
        let _ = writeln!(
            out,
            "<rect class=\"background\" x=\"0\" y=\"0\" width=\"{}\" height=\"{}\"/>",
            num(width),
            num(height)
        );
        Svg { out }
    }

    fn rect(&mut self, class: &str, x: f64, y: f64, w: f64, h: f64) {
        let _ = writeln!(
            self.out,
            "<rect class=\"{class}\" x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\"/>",
            num(x),
            num(y),
            num(w),
            num(h)
        );
    }

    fn line(&mut self, class: &str, x1: f64, y1: f64, x2: f64, y2: f64) {
        let _ = writeln!(
            self.out,
            "<line class=\"{class}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
            num(x1),
            num(y1),
            num(x2),
            num(y2)
        );
    }

    fn circle(&mut self, class: &str, cx: f64, cy: f64, r: f64) {
        let _ = writeln!(
            self.out,
            "<circle class=\"{class}\" cx=\"{}\" cy=\"{}\" r=\"{}\"/>",
            num(cx),
            num(cy),
            num(r)
        );
    }

    fn text(&mut self, class: &str, x: f64, y: f64, anchor: &str, body: &str) {
        let _ = writeln!(
            self.out,
            "<text class=\"{class}\" x=\"{}\" y=\"{}\" text-anchor=\"{anchor}\">{}</text>",
            num(x),
            num(y),
            escape(body)
        );
    }

    fn finish(mut self) -> String {
        self.out.push_str("</svg>\n");
        self.out
    }
}

fn num(x: f64) -> String {
    let s = format!("{x:.2}");
    if s == "-0.00" {
        "0.00".to_owned()
    } else {
        s
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

const TEXT_STYLE: &str = "text{font-family:sans-serif;font-size:11px;fill:#222}";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixPlotSpec {
    /// `ordering[position] = node`.
    pub ordering: Vec<usize>,
    /// Number of leading positions that belong to the core.
    pub boundary_index: usize,
    pub cell_px: u32,
    pub max_renderable_n: usize,
}

impl MatrixPlotSpec {
    /// Descending degree with ties by id. When `core` is given its members
    /// come first (same order inside) and the boundary sits after them.
    pub fn degree_ordered(graph: &Graph, core: Option<&[usize]>) -> Result<MatrixPlotSpec> {
        let mut in_core = vec![false; graph.node_count()];
        if let Some(core) = core {
            for &v in core {
                graph.check_node(v)?;
                in_core[v] = true;
            }
        }
        let mut ordering: Vec<usize> = (0..graph.node_count()).collect();
        ordering.sort_by(|&a, &b| {
            in_core[b]
                .cmp(&in_core[a])
                .then(graph.neighbors(b).len().cmp(&graph.neighbors(a).len()))
                .then(a.cmp(&b))
        });
        let boundary_index = match core {
            Some(_) => in_core.iter().filter(|&&c| c).count(),
            None => graph.node_count(),
        };
        Ok(MatrixPlotSpec {
            ordering,
            boundary_index,
            cell_px: 4,
            max_renderable_n: DEFAULT_MAX_RENDERABLE,
        })
    }

    fn validate(&self, graph: &Graph) -> Result<()> {
        let n = graph.node_count();
        if n > self.max_renderable_n {
            return Err(Error::Oversize {
                node_count: n,
                max: self.max_renderable_n,
            });
        }
        if self.cell_px == 0 {
            return Err(Error::invalid("cell size must be positive"));
        }
        if self.boundary_index > n {
            return Err(Error::invalid(format!(
                "boundary index {} exceeds node count {n}",
                self.boundary_index
            )));
        }
        let mut seen = vec![false; n];
        if self.ordering.len() != n
            || self.ordering.iter().any(|&v| v >= n || std::mem::replace(&mut seen[v], true))
        {
            return Err(Error::invalid("ordering must be a permutation of the node ids"));
        }
        Ok(())
    }
}

fn ramp_level(degree: usize, max_degree: usize) -> usize {
    if max_degree <= 1 {
        return RAMP.len() - 1;
    }
    let t = ((degree + 1) as f64).ln() / ((max_degree + 1) as f64).ln();
    ((t * RAMP.len() as f64) as usize).min(RAMP.len() - 1)
}

fn tick_step(n: usize) -> usize {
    let raw = (n as f64 / 8.0).max(1.0);
    let base = 10f64.powf(raw.log10().floor());
    let step = [1.0, 2.0, 5.0, 10.0]
        .iter()
        .map(|m| m * base)
        .find(|&s| s >= raw)
        .unwrap_or(10.0 * base);
    step as usize
}

/// Adjacency matrix in the given ordering: one filled cell per ordered
/// adjacency entry, dotted lines at the core/periphery boundary.
pub fn matrix_plot(graph: &Graph, spec: &MatrixPlotSpec) -> Result<String> {
    spec.validate(graph)?;
    let n = graph.node_count();
    let cell = spec.cell_px as f64;
    let margin = 48.0;
    let side = n as f64 * cell;
    let (width, height) = (margin + side + 16.0, margin + side + 16.0);

    let mut style = String::from(
        ".background{fill:#ffffff}.frame{fill:none;stroke:#444;stroke-width:1}\
         .boundary{stroke:#1f4fd1;stroke-width:1.5;stroke-dasharray:2 3}.tick{font-size:9px}",
    );
    for (i, color) in RAMP.iter().enumerate() {
        let _ = write!(style, ".edge.r{i}{{fill:{color}}}");
    }
    style.push_str(TEXT_STYLE);
    let mut svg = Svg::new(width, height, &style);

    let mut position = vec![0usize; n];
    for (p, &v) in spec.ordering.iter().enumerate() {
        position[v] = p;
    }
    let max_degree = graph.max_degree();
    for (row, &u) in spec.ordering.iter().enumerate() {
        let class = format!("edge r{}", ramp_level(graph.neighbors(u).len(), max_degree));
        let mut cols: Vec<usize> = graph.neighbors(u).iter().map(|&v| position[v]).collect();
        cols.sort_unstable();
        for col in cols {
            svg.rect(
                &class,
                margin + col as f64 * cell,
                margin + row as f64 * cell,
                cell,
                cell,
            );
        }
    }
    svg.rect("frame", margin, margin, side, side);
    let b = margin + spec.boundary_index as f64 * cell;
    svg.line("boundary", b, margin, b, margin + side);
    svg.line("boundary", margin, b, margin + side, b);

    if n > 0 {
        let step = tick_step(n);
        for rank in (0..n).step_by(step) {
            let centre = margin + (rank as f64 + 0.5) * cell;
            svg.text("tick", centre, margin - 6.0, "middle", &rank.to_string());
            svg.text("tick", margin - 6.0, centre + 3.0, "end", &rank.to_string());
        }
    }
    svg.text("axis-title", margin + side / 2.0, 14.0, "middle", "rank by degree");
    Ok(svg.finish())
}

struct LogAxis {
    lo: f64,
    hi: f64,
}

impl LogAxis {
    /// Decade-aligned range covering `values` (all > 0).
    fn covering(values: impl Iterator<Item = f64>) -> LogAxis {
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for v in values {
            lo = lo.min(v.log10());
            hi = hi.max(v.log10());
        }
        let (lo, mut hi) = (lo.floor(), hi.ceil());
        if hi <= lo {
            hi = lo + 1.0;
        }
        LogAxis { lo, hi }
    }

    fn frac(&self, v: f64) -> f64 {
        (v.log10() - self.lo) / (self.hi - self.lo)
    }

    fn decades(&self) -> impl Iterator<Item = f64> {
        (self.lo as i32..=self.hi as i32).map(|e| 10f64.powi(e))
    }
}

fn decade_label(v: f64) -> String {
    if v >= 1.0 {
        format!("{}", v.round() as u64)
    } else {
        format!("{v}")
    }
}

const PLOT_STYLE: &str = ".background{fill:#ffffff}.frame{fill:none;stroke:#444;stroke-width:1}\
     .grid{stroke:#ddd;stroke-width:0.5}.marker{fill:#1f4fd1;fill-opacity:0.8}\
     .core{fill:#2ca02c;fill-opacity:0.7}.periphery{fill:#1f77b4;fill-opacity:0.5}\
     .reference{stroke:#d62728;stroke-width:1.5;stroke-dasharray:6 4}\
     .annotation{font-size:12px}";

const PLOT_LEFT: f64 = 64.0;
const PLOT_TOP: f64 = 40.0;
const PLOT_SIDE: f64 = 400.0;

/// Log-log scatter of `(k, K_nn(k))` with the assortativity written on the
/// figure. The plot area is square and both axes use the same decade span
/// when the data allow, so `k = K_nn` falls on the diagonal.
pub fn knn_plot(table: &DegreeCorrelationTable) -> Result<String> {
    if table.rows.is_empty() {
        return Err(Error::invalid("degree correlation table has no rows"));
    }
    let x_axis = LogAxis::covering(table.rows.iter().map(|r| r.k as f64));
    let y_axis = LogAxis::covering(table.rows.iter().map(|r| r.knn));
    let width = PLOT_LEFT + PLOT_SIDE + 24.0;
    let height = PLOT_TOP + PLOT_SIDE + 48.0;
    let mut svg = Svg::new(width, height, &format!("{PLOT_STYLE}{TEXT_STYLE}"));

    draw_log_x_axis(&mut svg, &x_axis);
    for d in y_axis.decades() {
        let y = PLOT_TOP + PLOT_SIDE * (1.0 - y_axis.frac(d));
        svg.line("grid", PLOT_LEFT, y, PLOT_LEFT + PLOT_SIDE, y);
        svg.text("tick", PLOT_LEFT - 6.0, y + 4.0, "end", &decade_label(d));
    }
    svg.rect("frame", PLOT_LEFT, PLOT_TOP, PLOT_SIDE, PLOT_SIDE);
    for row in &table.rows {
        let cx = PLOT_LEFT + PLOT_SIDE * x_axis.frac(row.k as f64);
        let cy = PLOT_TOP + PLOT_SIDE * (1.0 - y_axis.frac(row.knn));
        svg.circle("marker", cx, cy, 3.0);
    }
    let note = match table.assortativity.value() {
        Some(r) => format!("assortativity = {r:.3}"),
        None => format!(
            "assortativity undefined ({})",
            table.assortativity.reason().unwrap_or("unknown")
        ),
    };
    svg.text("annotation", PLOT_LEFT + PLOT_SIDE - 6.0, PLOT_TOP + 16.0, "end", &note);
    svg.text("axis-title", PLOT_LEFT + PLOT_SIDE / 2.0, height - 8.0, "middle", "k");
    svg.text("axis-title", 14.0, PLOT_TOP - 14.0, "start", "Knn(k)");
    Ok(svg.finish())
}

fn draw_log_x_axis(svg: &mut Svg, axis: &LogAxis) {
    for d in axis.decades() {
        let x = PLOT_LEFT + PLOT_SIDE * axis.frac(d);
        svg.line("grid", x, PLOT_TOP, x, PLOT_TOP + PLOT_SIDE);
        svg.text("tick", x, PLOT_TOP + PLOT_SIDE + 16.0, "middle", &decade_label(d));
    }
}

/// Degree (log x) against number of super-peer neighbors, core members styled
/// apart from the rest, with a dashed reference line at `reference_x`.
/// Nodes of degree 0 have no position on a log axis and are skipped.
pub fn scatter_ksn_plot(profile: &[ProfileEntry], reference_x: f64) -> Result<String> {
    if profile.is_empty() {
        return Err(Error::invalid("profile is empty"));
    }
    if !(reference_x > 0.0 && reference_x.is_finite()) {
        return Err(Error::invalid("reference line must be at a positive degree"));
    }
    let points: Vec<&ProfileEntry> = profile.iter().filter(|e| e.k >= 1).collect();
    if points.is_empty() {
        return Err(Error::invalid("profile has no node with degree >= 1"));
    }
    let x_axis = LogAxis::covering(
        points
            .iter()
            .map(|e| e.k as f64)
            .chain(std::iter::once(reference_x)),
    );
    let y_max = points.iter().map(|e| e.ksn).max().unwrap_or(0).max(1) as f64;
    let width = PLOT_LEFT + PLOT_SIDE + 24.0;
    let height = PLOT_TOP + PLOT_SIDE + 48.0;
    let mut svg = Svg::new(width, height, &format!("{PLOT_STYLE}{TEXT_STYLE}"));

    draw_log_x_axis(&mut svg, &x_axis);
    let y_step = tick_step(y_max as usize + 1);
    for t in (0..=y_max as usize).step_by(y_step) {
        let y = PLOT_TOP + PLOT_SIDE * (1.0 - t as f64 / y_max);
        svg.line("grid", PLOT_LEFT, y, PLOT_LEFT + PLOT_SIDE, y);
        svg.text("tick", PLOT_LEFT - 6.0, y + 4.0, "end", &t.to_string());
    }
    svg.rect("frame", PLOT_LEFT, PLOT_TOP, PLOT_SIDE, PLOT_SIDE);
    // Periphery first so core markers stay visible on top.
    for core_pass in [false, true] {
        for e in points.iter().filter(|e| e.in_core == core_pass) {
            let cx = PLOT_LEFT + PLOT_SIDE * x_axis.frac(e.k as f64);
            let cy = PLOT_TOP + PLOT_SIDE * (1.0 - e.ksn as f64 / y_max);
            svg.circle(if core_pass { "core" } else { "periphery" }, cx, cy, 2.5);
        }
    }
    let rx = PLOT_LEFT + PLOT_SIDE * x_axis.frac(reference_x);
    svg.line("reference", rx, PLOT_TOP, rx, PLOT_TOP + PLOT_SIDE);
    svg.text("axis-title", PLOT_LEFT + PLOT_SIDE / 2.0, height - 8.0, "middle", "k_i (degree)");
    svg.text("axis-title", 14.0, PLOT_TOP - 14.0, "start", "k{SN}_i (super-peer neighbors)");
    Ok(svg.finish())
}
