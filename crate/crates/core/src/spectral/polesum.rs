//! Fast evaluation of `Σ w_i/(p_i − λ)` and `Σ w_i/(p_i − λ)²` over sorted
//! poles with a binary tree of Taylor moments.

const ORDER: usize = 30;
const LEAF: usize = 48;
/// A node is expanded when `|c − λ| ≥ ACCEPT·ρ`; terms shrink like `ACCEPT^{-j}`.
const ACCEPT: f64 = 4.0;

#[derive(Debug, Clone)]
struct Node {
    lo: usize,
    hi: usize,
    centre: f64,
    radius: f64,
    children: Option<(usize, usize)>,
    /// `m_j = Σ w·((p − c)/ρ)^j`.
    moments: [f64; ORDER],
}

#[derive(Debug, Clone)]
pub(crate) struct PoleSum {
    poles: Vec<f64>,
    weights: Vec<f64>,
    nodes: Vec<Node>,
}

impl PoleSum {
    pub(crate) fn new(poles: Vec<f64>, weights: Vec<f64>) -> PoleSum {
        debug_assert!(poles.windows(2).all(|w| w[0] < w[1]));
        let mut s = PoleSum { poles, weights, nodes: Vec::new() };
        if !s.poles.is_empty() {
            s.build(0, s.poles.len());
        }
        s
    }

    fn build(&mut self, lo: usize, hi: usize) -> usize {
        let (a, b) = (self.poles[lo], self.poles[hi - 1]);
        let centre = 0.5 * (a + b);
        let radius = (0.5 * (b - a)).max(f64::MIN_POSITIVE);
        let mut moments = [0.0; ORDER];
        for i in lo..hi {
            let x = (self.poles[i] - centre) / radius;
            let mut p = self.weights[i];
            for m in moments.iter_mut() {
                *m += p;
                p *= x;
            }
        }
        let id = self.nodes.len();
        self.nodes.push(Node { lo, hi, centre, radius, children: None, moments });
        if hi - lo > LEAF {
            let mid = lo + (hi - lo) / 2;
            let l = self.build(lo, mid);
            let r = self.build(mid, hi);
            self.nodes[id].children = Some((l, r));
        }
        id
    }

    /// `(Σ w/(p − λ), Σ w/(p − λ)²)`.
    pub(crate) fn eval(&self, lambda: f64) -> (f64, f64) {
        let (mut s0, mut s1) = (0.0, 0.0);
        if self.nodes.is_empty() {
            return (s0, s1);
        }
        let mut stack = vec![0usize];
        while let Some(id) = stack.pop() {
            let node = &self.nodes[id];
            let d = node.centre - lambda;
            if d.abs() >= ACCEPT * node.radius {
                let r = -node.radius / d;
                let (mut a0, mut a1) = (0.0, 0.0);
                let mut p = 1.0;
                for (j, m) in node.moments.iter().enumerate() {
                    a0 += m * p;
                    a1 += (j + 1) as f64 * m * p;
                    p *= r;
                }
                s0 += a0 / d;
                s1 += a1 / (d * d);
            } else if let Some((l, r)) = node.children {
                stack.push(r);
                stack.push(l);
            } else {
                for i in node.lo..node.hi {
                    let inv = 1.0 / (self.poles[i] - lambda);
                    s0 += self.weights[i] * inv;
                    s1 += self.weights[i] * inv * inv;
                }
            }
        }
        (s0, s1)
    }
}
