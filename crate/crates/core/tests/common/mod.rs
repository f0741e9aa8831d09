#![allow(dead_code)]

use pointed_hopf::cartan::{cartan_of_type, two_param_datum, validate_datum, CartanDatum, RawDatum};

pub fn raw(group: Vec<u32>, g: Vec<Vec<i64>>, chi: Vec<Vec<i64>>, cartan: Vec<Vec<i32>>) -> RawDatum {
    RawDatum { group, g, chi, cartan, lambda: None, mu: None }
}

pub fn taft(n: u32) -> CartanDatum {
    validate_datum(&raw(vec![n], vec![vec![1]], vec![vec![1]], vec![vec![2]])).unwrap()
}

pub fn a2() -> CartanDatum {
    validate_datum(&raw(
        vec![3, 3],
        vec![vec![1, 0], vec![0, 1]],
        vec![vec![1, 2], vec![0, 1]],
        vec![vec![2, -1], vec![-1, 2]],
    ))
    .unwrap()
}

pub fn a1xa1() -> CartanDatum {
    validate_datum(&raw(
        vec![3, 3],
        vec![vec![1, 0], vec![0, 1]],
        vec![vec![1, 0], vec![0, 1]],
        vec![vec![2, 0], vec![0, 2]],
    ))
    .unwrap()
}

pub fn b2() -> CartanDatum {
    two_param_datum(&cartan_of_type("B2").unwrap(), &[2, 1], 3, 1, 0).unwrap()
}

pub fn trivial() -> CartanDatum {
    validate_datum(&raw(vec![2], vec![], vec![], vec![])).unwrap()
}
