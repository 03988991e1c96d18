//! Native SVG rendering of the isola: the asymptotic ellipse plus the
//! asymptotic and directly-computed eigenvalue point sets, with the
//! imaginary axis recentered on the isola center.

use std::fmt::Write;

pub struct IsolaPlot {
    pub eps: f64,
    /// isola center on the imaginary axis (sigma + drift eps^2)
    pub center_im: f64,
    /// ellipse semi-axes (real direction, imaginary direction)
    pub semi_re: f64,
    pub semi_im: f64,
    /// (Re lambda, Im lambda) of the asymptotic eigenvalues
    pub asymptotic: Vec<(f64, f64)>,
    /// same for the direct reduction
    pub direct: Vec<(f64, f64)>,
}

const W: f64 = 640.0;
const H: f64 = 480.0;
const MARGIN: f64 = 60.0;

pub fn render(plot: &IsolaPlot) -> String {
    let mut xmax = plot.semi_re;
    let mut ymax = plot.semi_im;
    for &(re, im) in plot.asymptotic.iter().chain(&plot.direct) {
        xmax = xmax.max(re.abs());
        ymax = ymax.max((im - plot.center_im).abs());
    }
    xmax *= 1.15;
    ymax *= 1.15;
    let sx = (W - 2.0 * MARGIN) / (2.0 * xmax);
    let sy = (H - 2.0 * MARGIN) / (2.0 * ymax);
    let px = |x: f64| W / 2.0 + x * sx;
    let py = |y: f64| H / 2.0 - y * sy;

    let mut s = String::new();
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{W}\" height=\"{H}\" viewBox=\"0 0 {W} {H}\">"
    );
    let _ = writeln!(s, "<rect width=\"{W}\" height=\"{H}\" fill=\"white\"/>");
    let _ = writeln!(
        s,
        "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"#999\" stroke-width=\"1\"/>",
        px(-xmax),
        py(0.0),
        px(xmax),
        py(0.0)
    );
    let _ = writeln!(
        s,
        "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"#999\" stroke-width=\"1\"/>",
        px(0.0),
        py(-ymax),
        px(0.0),
        py(ymax)
    );
    let _ = writeln!(
        s,
        "<ellipse cx=\"{:.2}\" cy=\"{:.2}\" rx=\"{:.2}\" ry=\"{:.2}\" fill=\"none\" stroke=\"#e69500\" stroke-width=\"2\"/>",
        px(0.0),
        py(0.0),
        plot.semi_re * sx,
        plot.semi_im * sy
    );
    for &(re, im) in &plot.asymptotic {
        let _ = writeln!(
            s,
            "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"2.2\" fill=\"none\" stroke=\"#e69500\" stroke-width=\"1\"/>",
            px(re),
            py(im - plot.center_im)
        );
    }
    for &(re, im) in &plot.direct {
        let _ = writeln!(
            s,
            "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"1.6\" fill=\"#1f77b4\"/>",
            px(re),
            py(im - plot.center_im)
        );
    }
    let _ = writeln!(
        s,
        "<text x=\"{:.2}\" y=\"20\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">unstable eigenvalue isola, eps = {}</text>",
        W / 2.0,
        plot.eps
    );
    let _ = writeln!(
        s,
        "<text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">Re lambda</text>",
        W / 2.0,
        H - 15.0
    );
    let _ = writeln!(
        s,
        "<text x=\"18\" y=\"{:.2}\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" transform=\"rotate(-90 18 {:.2})\">Im lambda - center</text>",
        H / 2.0,
        H / 2.0
    );
    s.push_str("</svg>\n");
    s
}
