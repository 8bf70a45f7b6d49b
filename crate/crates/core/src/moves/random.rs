use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::apply::{insert_bubble, insert_crossing};
use crate::diagram::{Diagram, Sign};

/// A valid diagram built from `seed` by random insertions into free loops:
/// vertex pairs of the given valences (at most `vertices_max` vertices), then
/// up to `crossings_max` crossings, then random rotations of vertex ends.
pub fn random_diagram(seed: u64, crossings_max: usize, vertices_max: usize, valences: &[usize]) -> Diagram {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let loops = if crossings_max + vertices_max == 0 {
        1
    } else {
        rng.gen_range(1..=2)
    };
    let mut d = Diagram::new(loops, Vec::new(), Vec::new());
    let valences: Vec<usize> = valences.iter().copied().filter(|&v| v >= 3).collect();
    let pairs = if valences.is_empty() || vertices_max < 2 {
        0
    } else {
        rng.gen_range(1..=vertices_max / 2)
    };
    for _ in 0..pairs {
        let v = *valences.choose(&mut rng).unwrap();
        let a = rng.gen_range(0..d.arc_count);
        d = insert_bubble(&d, a, v).expect("bubble on an existing arc");
    }
    let crossings = rng.gen_range(0..=crossings_max);
    for _ in 0..crossings {
        let under = rng.gen_range(0..d.arc_count);
        let over = rng.gen_range(0..d.arc_count);
        let sign = if rng.gen_bool(0.5) {
            Sign::Positive
        } else {
            Sign::Negative
        };
        d = insert_crossing(&d, under, over, sign).expect("crossing on existing arcs");
    }
    for v in &mut d.vertices {
        let r = rng.gen_range(0..v.ends.len());
        v.ends.rotate_left(r);
    }
    d
}
