//! Shared fixtures for the criterion benchmarks.

use rrcodes::{ConstacyclicFamily, FieldSpec, GeneratorMatrix, Polynomial};

/// Negacyclic codes of length 56 over F7.
pub fn negacyclic_56() -> ConstacyclicFamily {
    let f7 = FieldSpec::prime(7).unwrap();
    ConstacyclicFamily::new(&f7.from_int(-1), 56, 1).unwrap()
}

/// `<f1 f4>` of length 8 over F7: 7^4 codewords, distance 5.
pub fn component_code() -> GeneratorMatrix {
    let f7 = FieldSpec::prime(7).unwrap();
    let g = &Polynomial::from_ints(&f7, &[6, 1, 1]) * &Polynomial::from_ints(&f7, &[6, 3, 1]);
    rrcodes::ConstacyclicCode::new(&f7.from_int(6), 8, g)
        .unwrap()
        .generator_matrix()
}
