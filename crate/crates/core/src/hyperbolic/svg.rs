use std::fmt::Write;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use super::tokens::{level_start, level_tokens, HoroToken, Letter};
use crate::error::{domain, Error, Result};
use crate::numbers::{Rational, UnimodularMatrix};

const WIDTH: f64 = 800.0;
const MARGIN: f64 = 20.0;
const SAMPLES_PER_UNIT: u32 = 24;
const COLOR_A: &str = "#d62728";
const COLOR_D: &str = "#1f77b4";

/// Reduced fractions in `[lo, hi]` with denominator at most `max_den`,
/// sorted.
fn fractions(lo: &Rational, hi: &Rational, max_den: u64) -> Vec<Rational> {
    let mut out = Vec::new();
    for q in 1..=max_den {
        let qb = BigUint::from(q);
        let (ln, ld) = (lo.numer() * &qb, lo.denom());
        let first = ln.div_ceil(ld);
        let last = hi.numer() * &qb / hi.denom();
        let mut p = first;
        while p <= last {
            if p.gcd(&qb).is_one() {
                out.push(Rational::new(p.clone(), qb.clone()).expect("q > 0"));
            }
            p += 1u32;
        }
    }
    out.sort();
    out
}

fn point(g: &UnimodularMatrix) -> (f64, f64) {
    let [a, b, c, d] = g.entries().map(|e| e.to_f64().unwrap_or(f64::NAN));
    let den = c * c + d * d;
    ((a * c + b * d) / den, 1.0 / den)
}

fn flow(letter: Letter, s: f64) -> [f64; 4] {
    match letter {
        Letter::A => [1.0, 0.0, s, 1.0],
        Letter::D => [1.0, -s, 0.0, 1.0],
    }
}

fn arc(g: &UnimodularMatrix, token: &HoroToken) -> Vec<(f64, f64)> {
    let [a, b, c, d] = g.entries().map(|e| e.to_f64().unwrap_or(f64::NAN));
    let steps = SAMPLES_PER_UNIT * token.exponent;
    (0..=steps)
        .map(|k| {
            let s = f64::from(token.exponent) * f64::from(k) / f64::from(steps);
            let [p, q, r, t] = flow(token.letter, s);
            let (c2, d2) = (c * p + d * r, c * q + d * t);
            let (a2, b2) = (a * p + b * r, a * q + b * t);
            let den = c2 * c2 + d2 * d2;
            ((a2 * c2 + b2 * d2) / den, 1.0 / den)
        })
        .collect()
}

/// SVG 1.1 picture of the Ford circles touching `[lo, hi]` with denominator
/// at most `max_den`. With `overlay = Some(n)` the horocycle arcs of
/// [`level_tokens`]`(n)` are drawn on top, starting from the last node of
/// level `n - 1`, with the tangency point reached after each token marked.
pub fn render_ford_svg(
    range: (&Rational, &Rational),
    max_den: u64,
    overlay: Option<u32>,
) -> Result<String> {
    let (lo, hi) = range;
    if lo.is_infinite() || hi.is_infinite() {
        return Err(domain("render_ford_svg", "infinite range endpoint"));
    }
    if lo >= hi {
        return Err(Error::EmptyInterval(lo.to_string(), hi.to_string()));
    }
    if max_den == 0 {
        return Err(domain("render_ford_svg", "max_den = 0"));
    }
    let (x0, x1) = (lo.to_f64(), hi.to_f64());
    let scale = (WIDTH - 2.0 * MARGIN) / (x1 - x0);
    let height = scale.min(WIDTH) + 2.0 * MARGIN;
    let base = height - MARGIN;
    let px = |x: f64| MARGIN + (x - x0) * scale;
    let py = |y: f64| base - y * scale;

    let mut out = String::new();
    let w = |out: &mut String, s: std::fmt::Arguments<'_>| out.write_fmt(s).expect("string write");
    w(&mut out, format_args!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{WIDTH}\" height=\"{height:.2}\" viewBox=\"0 0 {WIDTH} {height:.2}\">\n"
    ));
    w(&mut out, format_args!(
        "<line x1=\"0\" y1=\"{base:.2}\" x2=\"{WIDTH}\" y2=\"{base:.2}\" stroke=\"black\" stroke-width=\"1\"/>\n"
    ));
    for x in fractions(lo, hi, max_den) {
        let q = x.denom().to_f64().unwrap_or(f64::INFINITY);
        let r = 1.0 / (2.0 * q * q);
        w(&mut out, format_args!(
            "<circle class=\"ford\" data-touch=\"{x}\" cx=\"{:.3}\" cy=\"{:.3}\" r=\"{:.3}\" fill=\"none\" stroke=\"gray\" stroke-width=\"0.8\"/>\n",
            px(x.to_f64()),
            py(r),
            r * scale
        ));
    }
    if let Some(n) = overlay {
        let row = level_tokens(n)?;
        let mut g = level_start(n);
        let mut marks = vec![point(&g)];
        for t in row.tokens() {
            let color = match t.letter {
                Letter::A => COLOR_A,
                Letter::D => COLOR_D,
            };
            let mut d = String::new();
            for (k, (x, y)) in arc(&g, t).into_iter().enumerate() {
                let cmd = if k == 0 { 'M' } else { 'L' };
                write!(d, "{cmd}{:.3} {:.3} ", px(x), py(y)).expect("string write");
            }
            w(&mut out, format_args!(
                "<path class=\"arc\" data-token=\"{t}\" d=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\"/>\n",
                d.trim_end()
            ));
            g = &g * &t.matrix();
            marks.push(point(&g));
        }
        for (x, y) in marks {
            w(
                &mut out,
                format_args!(
                "<circle class=\"tangent\" cx=\"{:.3}\" cy=\"{:.3}\" r=\"2.5\" fill=\"black\"/>\n",
                px(x),
                py(y)
            ),
            );
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn count(svg: &str, needle: &str) -> usize {
        svg.matches(needle).count()
    }

    #[test]
    fn circle_counts() {
        let svg = render_ford_svg((&r("0"), &r("1")), 3, None).unwrap();
        assert_eq!(count(&svg, "class=\"ford\""), 5);
        let svg = render_ford_svg((&r("0"), &r("1")), 1, None).unwrap();
        assert_eq!(count(&svg, "class=\"ford\""), 2);
        assert_eq!(
            fractions(&r("0"), &r("1"), 3),
            ["0", "1/3", "1/2", "2/3", "1"].map(r)
        );
        assert_eq!(
            fractions(&r("1/3"), &r("1/2"), 5),
            ["1/3", "2/5", "1/2"].map(r)
        );
    }

    #[test]
    fn overlay_arcs() {
        let svg = render_ford_svg((&r("0"), &r("3")), 4, Some(3)).unwrap();
        assert_eq!(count(&svg, "class=\"arc\""), 5);
        assert_eq!(count(&svg, "class=\"tangent\""), 6);
        assert_eq!(count(&svg, COLOR_A), 3);
        assert_eq!(count(&svg, COLOR_D), 2);
    }

    #[test]
    fn arcs_end_at_token_images() {
        let g = level_start(3);
        for t in level_tokens(3).unwrap().tokens() {
            let pts = arc(&g, t);
            let (ex, ey) = point(&(&g * &t.matrix()));
            let (x, y) = *pts.last().unwrap();
            assert!((x - ex).abs() < 1e-12 && (y - ey).abs() < 1e-12);
        }
    }

    #[test]
    fn rejects_bad_ranges() {
        assert!(matches!(
            render_ford_svg((&r("1"), &r("1")), 3, None),
            Err(Error::EmptyInterval(..))
        ));
        assert!(render_ford_svg((&r("0"), &r("inf")), 3, None).is_err());
        assert!(render_ford_svg((&r("0"), &r("1")), 0, None).is_err());
        assert!(render_ford_svg((&r("0"), &r("1")), 3, Some(1)).is_err());
    }
}
