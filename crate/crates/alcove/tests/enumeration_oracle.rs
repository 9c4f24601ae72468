//! Cross-validation of the gallery walker against a naive enumeration of the
//! same type class.
//!
//! The walker tracks integer affine maps and materializes faces through
//! them; the oracle here instead works face by face, asking each alcove for
//! its face of the required type (which goes through witness folding) and
//! branching on fold/cross. The two routes share only the carrier-face
//! substrate, so agreement pins down both.

use std::collections::HashSet;

use alcove::affine::{
    alcoves_containing, face_of_type_in_alcove, face_type, origin_vertex, reflect_face, Face,
    FaceType,
};
use alcove::gallery::{
    enumerate_same_type, gallery_from_word, ls_weight_histogram, minimal_gallery, minimal_length,
    Gallery, WalkOptions,
};
use alcove::{LatticeVector, RootSystem};

fn naive_same_type(rs: &RootSystem, gamma: &Gallery) -> Vec<Gallery> {
    let types: Vec<FaceType> = gamma
        .smalls()
        .iter()
        .map(|f| face_type(rs, f).unwrap())
        .collect();
    let mut out = Vec::new();
    for start in alcoves_containing(rs, &origin_vertex(rs)).unwrap() {
        let smalls = vec![origin_vertex(rs)];
        let alcoves = vec![start];
        extend(rs, &types, 1, smalls, alcoves, &mut out);
    }
    out
}

fn extend(
    rs: &RootSystem,
    types: &[FaceType],
    j: usize,
    smalls: Vec<Face>,
    alcoves: Vec<Face>,
    out: &mut Vec<Gallery>,
) {
    if j + 1 == types.len() {
        let end = face_of_type_in_alcove(rs, alcoves.last().unwrap(), &types[j]).unwrap();
        let mut smalls = smalls;
        smalls.push(end);
        out.push(Gallery::from_parts(rs, smalls, alcoves).unwrap());
        return;
    }
    let current = alcoves.last().unwrap().clone();
    let facet = face_of_type_in_alcove(rs, &current, &types[j]).unwrap();
    let wall = facet.wall().expect("interior types are facets");
    let crossed = reflect_face(rs, &current, wall).unwrap();
    for next in [current, crossed] {
        let mut smalls = smalls.clone();
        let mut alcoves = alcoves.clone();
        smalls.push(facet.clone());
        alcoves.push(next);
        extend(rs, types, j + 1, smalls, alcoves, out);
    }
}

#[test]
fn ls_histogram_independent_of_reduced_word() {
    // The by-weight LS counts are an invariant of λ, not of the chosen
    // reduced decomposition: every based gallery to λ must produce the same
    // histogram. Try every word of minimal length.
    let rs = RootSystem::type_a(2).unwrap();
    // (2,1) admits a single reduced word; (2,2) has two, related by the
    // braid move in the middle of the word.
    for (coords, expected_words) in [(vec![2i64, 1], 1), (vec![2, 2], 2)] {
        let lam = LatticeVector::coweight(coords.clone());
        let len = minimal_length(&rs, &lam).unwrap() as u32;
        let reference = ls_weight_histogram(
            &rs,
            &minimal_gallery(&rs, &lam).unwrap(),
            WalkOptions::default(),
            None,
        )
        .unwrap();

        let letters = rs.rank() + 1;
        let mut accepted = 0;
        for code in 0..(letters as u64).pow(len) {
            let mut word = Vec::with_capacity(len as usize);
            let mut c = code;
            for _ in 0..len {
                word.push((c % letters as u64) as usize);
                c /= letters as u64;
            }
            let Ok(gamma) = gallery_from_word(&rs, &lam, &word) else {
                continue;
            };
            accepted += 1;
            let hist =
                ls_weight_histogram(&rs, &gamma, WalkOptions::default(), None).unwrap();
            assert_eq!(hist, reference, "histogram depends on the word {word:?}");
        }
        assert_eq!(accepted, expected_words, "reduced-word count for {coords:?}");
    }
}

#[test]
fn walker_agrees_with_naive_enumeration() {
    for (rank, coords) in [
        (1usize, vec![2i64]),
        (2, vec![1, 1]),
        (2, vec![2, 1]),
        (2, vec![0, 2]),
        (3, vec![1, 0, 0]),
        (3, vec![0, 1, 0]),
    ] {
        let rs = RootSystem::type_a(rank).unwrap();
        let lam = LatticeVector::coweight(coords.clone());
        let gamma = minimal_gallery(&rs, &lam).unwrap();

        let fast: Vec<Gallery> = enumerate_same_type(&rs, &gamma).unwrap();
        let slow = naive_same_type(&rs, &gamma);
        assert_eq!(fast.len(), slow.len(), "count mismatch at {coords:?}");

        let fast_set: HashSet<&Gallery> = fast.iter().collect();
        let slow_set: HashSet<&Gallery> = slow.iter().collect();
        assert_eq!(fast_set, slow_set, "set mismatch at {coords:?}");
    }
}
