//! Minimal deterministic Nelder-Mead simplex search in two variables.
//!
//! Coefficients: reflection 1, expansion 2, contraction 0.5, shrink 0.5.
//! Terminates when the simplex diameter (largest pairwise vertex distance)
//! drops below the tolerance; reports failure past the iteration cap.

pub(crate) struct SimplexOutcome {
    pub x: [f64; 2],
    pub value: f64,
}

/// Maximize `f` starting from `start`, with initial simplex steps `step`.
/// Returns `None` if the simplex has not collapsed after `max_iter` iterations.
pub(crate) fn maximize_2d<F: FnMut(f64, f64) -> f64>(
    mut f: F,
    start: [f64; 2],
    step: [f64; 2],
    diameter_tol: f64,
    max_iter: usize,
) -> Option<SimplexOutcome> {
    // Standard formulation minimizes; negate the objective.
    let mut g = move |x: &[f64; 2]| -f(x[0], x[1]);

    let mut xs = [
        start,
        [start[0] + step[0], start[1]],
        [start[0], start[1] + step[1]],
    ];
    let mut fs = [g(&xs[0]), g(&xs[1]), g(&xs[2])];

    let order = |xs: &mut [[f64; 2]; 3], fs: &mut [f64; 3]| {
        // insertion sort on three entries, stable
        for i in 1..3 {
            let mut j = i;
            while j > 0 && fs[j] < fs[j - 1] {
                fs.swap(j, j - 1);
                xs.swap(j, j - 1);
                j -= 1;
            }
        }
    };

    for _ in 0..max_iter {
        order(&mut xs, &mut fs);

        let diameter = pair_dist(&xs[0], &xs[1])
            .max(pair_dist(&xs[0], &xs[2]))
            .max(pair_dist(&xs[1], &xs[2]));
        if diameter < diameter_tol {
            return Some(SimplexOutcome {
                x: xs[0],
                value: -fs[0],
            });
        }

        let centroid = [(xs[0][0] + xs[1][0]) / 2.0, (xs[0][1] + xs[1][1]) / 2.0];
        let reflected = lerp(&centroid, &xs[2], -1.0);
        let fr = g(&reflected);

        if fr < fs[0] {
            // try to expand past the reflection
            let expanded = lerp(&centroid, &reflected, 2.0);
            let fe = g(&expanded);
            if fe < fr {
                xs[2] = expanded;
                fs[2] = fe;
            } else {
                xs[2] = reflected;
                fs[2] = fr;
            }
        } else if fr < fs[1] {
            xs[2] = reflected;
            fs[2] = fr;
        } else {
            // contract toward the better of the reflected/worst points
            let contracted = if fr < fs[2] {
                lerp(&centroid, &reflected, 0.5)
            } else {
                lerp(&centroid, &xs[2], 0.5)
            };
            let fc = g(&contracted);
            if fc < fs[2].min(fr) {
                xs[2] = contracted;
                fs[2] = fc;
            } else {
                // shrink everything toward the best vertex
                for i in 1..3 {
                    xs[i] = lerp(&xs[0], &xs[i], 0.5);
                    fs[i] = g(&xs[i]);
                }
            }
        }
    }
    None
}

fn pair_dist(a: &[f64; 2], b: &[f64; 2]) -> f64 {
    (a[0] - b[0]).hypot(a[1] - b[1])
}

/// `base + t * (target - base)`
fn lerp(base: &[f64; 2], target: &[f64; 2], t: f64) -> [f64; 2] {
    [
        base[0] + t * (target[0] - base[0]),
        base[1] + t * (target[1] - base[1]),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_quadratic_maximum() {
        let f = |x: f64, y: f64| -((x - 0.3).powi(2) + 2.0 * (y + 1.2).powi(2));
        let out = maximize_2d(f, [0.0, 0.0], [0.1, 0.1], 1e-10, 500).expect("converged");
        assert!((out.x[0] - 0.3).abs() < 1e-8);
        assert!((out.x[1] + 1.2).abs() < 1e-8);
        assert!(out.value.abs() < 1e-15);
    }

    #[test]
    fn reports_non_convergence() {
        // A plane has no interior maximum; the simplex chases it forever.
        let out = maximize_2d(|x, _| x, [0.0, 0.0], [0.1, 0.1], 1e-10, 50);
        assert!(out.is_none());
    }

    #[test]
    fn is_deterministic() {
        let f = |x: f64, y: f64| (x.sin() * y.cos()).cos();
        let a = maximize_2d(f, [1.0, 2.0], [0.05, 0.05], 1e-10, 500).unwrap();
        let b = maximize_2d(f, [1.0, 2.0], [0.05, 0.05], 1e-10, 500).unwrap();
        assert_eq!(a.x, b.x);
        assert_eq!(a.value, b.value);
    }
}
