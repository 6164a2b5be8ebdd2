//! Term tables for the decimation map: `(coefficient, [e1, ..., e9])` per monomial
//! `coefficient * x1^e1 * ... * x9^e9`. The `PRINTED_*` tables keep the original
//! term order, cancelling pairs and repeats included.

use super::schur::Term;

pub(crate) const PRINTED_D: &[Term] = &[
    (1, [0, 0, 0, 0, 0, 0, 2, 2, 2]),
    (-1, [0, 0, 2, 0, 0, 0, 0, 2, 2]),
    (-1, [0, 0, 0, 2, 0, 0, 1, 1, 2]),
    (-1, [0, 2, 0, 0, 0, 0, 2, 0, 2]),
    (1, [0, 2, 2, 0, 0, 0, 0, 0, 2]),
    (-1, [0, 0, 0, 0, 2, 0, 1, 2, 1]),
    (1, [0, 0, 2, 0, 0, 2, 0, 1, 1]),
    (-1, [0, 0, 0, 0, 0, 2, 2, 1, 1]),
    (1, [0, 0, 0, 2, 2, 0, 0, 1, 1]),
    (1, [0, 0, 0, 2, 0, 2, 1, 0, 1]),
    (1, [0, 2, 0, 0, 2, 0, 1, 0, 1]),
    (-1, [0, 0, 0, 2, 0, 0, 2, 2, 0]),
    (1, [0, 0, 2, 2, 0, 0, 0, 2, 0]),
    (1, [0, 0, 0, 0, 2, 2, 1, 1, 0]),
    (1, [0, 0, 0, 4, 0, 0, 1, 1, 0]),
    (-2, [1, 1, 1, 1, 1, 1, 0, 0, 0]),
    (-1, [2, 2, 2, 0, 0, 0, 0, 0, 0]),
    (1, [2, 2, 0, 0, 0, 0, 2, 0, 0]),
    (-1, [0, 0, 0, 2, 2, 2, 0, 0, 0]),
];

pub(crate) const PRINTED_P4: &[Term] = &[
    (1, [0, 1, 1, 2, 1, 1, 0, 0, 1]),
    (1, [1, 0, 0, 1, 2, 0, 1, 2, 0]),
    (-1, [1, 0, 0, 3, 2, 0, 0, 1, 0]),
    (-1, [1, 2, 0, 1, 2, 0, 1, 0, 0]),
    (1, [0, 1, 1, 3, 0, 0, 0, 0, 2]),
    (1, [1, 0, 0, 2, 1, 1, 1, 1, 0]),
    (-1, [1, 0, 0, 4, 1, 1, 0, 0, 0]),
    (-1, [2, 1, 1, 3, 0, 0, 0, 0, 0]),
    (1, [1, 0, 0, 0, 1, 1, 2, 2, 0]),
    (-1, [1, 0, 2, 0, 1, 1, 0, 2, 0]),
    (-1, [1, 0, 0, 2, 1, 1, 1, 1, 0]),
    (-1, [1, 2, 0, 0, 1, 1, 2, 0, 0]),
    (1, [1, 2, 2, 0, 1, 1, 0, 0, 0]),
    (1, [0, 1, 1, 1, 2, 2, 0, 0, 0]),
    (-1, [1, 0, 2, 1, 0, 2, 0, 1, 0]),
    (1, [1, 0, 0, 1, 0, 2, 2, 1, 0]),
    (-1, [1, 0, 0, 3, 0, 2, 1, 0, 0]),
    (1, [0, 1, 1, 2, 1, 1, 0, 0, 1]),
];

pub(crate) const PRINTED_P5: &[Term] = &[
    (1, [1, 0, 1, 0, 3, 0, 0, 2, 0]),
    (-1, [1, 2, 1, 0, 3, 0, 0, 0, 0]),
    (-1, [0, 1, 0, 1, 4, 1, 0, 0, 0]),
    (1, [0, 1, 0, 1, 2, 1, 1, 0, 1]),
    (1, [0, 1, 0, 2, 1, 0, 1, 0, 2]),
    (-1, [0, 1, 0, 2, 3, 0, 0, 0, 1]),
    (1, [1, 0, 1, 1, 2, 1, 0, 1, 0]),
    (-1, [2, 1, 0, 2, 1, 0, 1, 0, 0]),
    (1, [0, 1, 0, 0, 1, 2, 2, 0, 1]),
    (-1, [0, 1, 2, 0, 1, 2, 0, 0, 1]),
    (1, [1, 0, 1, 1, 2, 1, 0, 1, 0]),
    (-1, [0, 1, 0, 0, 3, 2, 1, 0, 0]),
    (1, [0, 1, 0, 1, 0, 1, 2, 0, 2]),
    (-1, [0, 1, 2, 1, 0, 1, 0, 0, 2]),
    (-1, [0, 1, 0, 1, 2, 1, 1, 0, 1]),
    (-1, [2, 1, 0, 1, 0, 1, 2, 0, 0]),
    (1, [1, 0, 1, 2, 1, 2, 0, 0, 0]),
    (1, [2, 1, 2, 1, 0, 1, 0, 0, 0]),
];

pub(crate) const PRINTED_P6: &[Term] = &[
    (1, [0, 0, 1, 1, 1, 0, 0, 2, 2]),
    (-1, [0, 2, 1, 1, 1, 0, 0, 0, 2]),
    (-1, [2, 0, 1, 1, 1, 0, 0, 2, 0]),
    (1, [2, 2, 1, 1, 1, 0, 0, 0, 0]),
    (1, [1, 1, 0, 2, 2, 1, 0, 0, 0]),
    (2, [1, 1, 0, 1, 1, 2, 1, 0, 0]),
    (1, [0, 0, 1, 0, 2, 1, 0, 2, 1]),
    (-1, [0, 0, 1, 0, 2, 3, 0, 1, 0]),
    (-1, [0, 2, 1, 0, 2, 1, 0, 0, 1]),
    (-1, [2, 0, 1, 2, 0, 1, 0, 1, 0]),
    (1, [0, 0, 1, 2, 0, 1, 0, 1, 2]),
    (-1, [0, 0, 1, 2, 0, 3, 0, 0, 1]),
    (-1, [0, 0, 1, 1, 1, 4, 0, 0, 0]),
    (1, [1, 1, 0, 0, 0, 3, 2, 0, 0]),
    (-1, [1, 1, 2, 0, 0, 3, 0, 0, 0]),
];

pub(crate) const PRINTED_P7: &[Term] = &[
    (-1, [0, 0, 0, 0, 1, 0, 2, 2, 1]),
    (1, [0, 0, 2, 0, 1, 0, 2, 0, 1]),
    (1, [0, 2, 0, 0, 1, 0, 2, 0, 1]),
    (-1, [0, 2, 2, 0, 1, 0, 0, 0, 1]),
    (1, [0, 0, 0, 0, 3, 0, 1, 2, 0]),
    (-1, [0, 0, 0, 2, 3, 0, 0, 1, 0]),
    (-1, [0, 2, 0, 0, 3, 0, 1, 0, 0]),
    (-1, [0, 0, 0, 1, 0, 0, 2, 1, 2]),
    (1, [0, 0, 0, 2, 1, 0, 1, 1, 1]),
    (1, [0, 0, 2, 1, 0, 0, 0, 1, 2]),
    (1, [0, 0, 0, 3, 0, 0, 1, 0, 2]),
    (-1, [0, 0, 0, 3, 2, 0, 0, 0, 1]),
    (-1, [2, 0, 2, 1, 0, 0, 0, 1, 0]),
    (1, [2, 0, 0, 1, 0, 0, 2, 1, 0]),
    (-1, [2, 0, 0, 3, 0, 0, 1, 0, 0]),
    (2, [0, 0, 2, 1, 1, 1, 0, 1, 1]),
    (-2, [0, 0, 0, 1, 1, 1, 2, 1, 1]),
    (2, [0, 0, 0, 3, 1, 1, 1, 0, 1]),
    (2, [0, 0, 0, 1, 3, 1, 1, 1, 0]),
    (-2, [0, 0, 0, 3, 3, 1, 0, 0, 0]),
    (-2, [1, 1, 1, 2, 2, 0, 0, 0, 0]),
    (1, [0, 0, 0, 1, 2, 0, 1, 1, 1]),
];

pub(crate) const PRINTED_P8: &[Term] = &[
    (-1, [0, 0, 0, 2, 0, 4, 1, 0, 0]),
    (-1, [0, 0, 2, 0, 0, 4, 0, 1, 0]),
    (-2, [0, 0, 0, 3, 1, 3, 0, 0, 0]),
    (-1, [0, 0, 0, 4, 0, 2, 0, 0, 1]),
    (-1, [2, 0, 0, 4, 0, 0, 0, 1, 0]),
    (1, [0, 0, 0, 4, 0, 0, 0, 1, 2]),
    (1, [0, 2, 0, 2, 0, 0, 1, 0, 2]),
    (1, [0, 0, 2, 0, 0, 2, 0, 2, 1]),
    (-1, [0, 2, 2, 0, 0, 2, 0, 0, 1]),
    (2, [0, 0, 0, 2, 0, 2, 1, 1, 1]),
    (-1, [2, 2, 0, 2, 0, 0, 1, 0, 0]),
    (1, [2, 0, 0, 2, 0, 0, 1, 2, 0]),
    (-1, [0, 0, 0, 2, 0, 0, 1, 2, 2]),
    (-2, [1, 1, 1, 2, 0, 2, 0, 0, 0]),
    (2, [0, 0, 0, 3, 1, 1, 0, 1, 1]),
    (-2, [0, 0, 0, 1, 1, 1, 1, 2, 1]),
    (2, [0, 0, 0, 1, 1, 3, 1, 1, 0]),
    (2, [0, 2, 0, 1, 1, 1, 1, 0, 1]),
    (-1, [0, 0, 0, 0, 0, 2, 2, 2, 1]),
    (1, [0, 2, 0, 0, 0, 2, 2, 0, 1]),
    (1, [0, 0, 0, 0, 0, 4, 2, 1, 0]),
];

pub(crate) const PRINTED_P9: &[Term] = &[
    (1, [0, 0, 0, 0, 4, 0, 0, 2, 1]),
    (-1, [0, 2, 0, 0, 4, 0, 0, 0, 1]),
    (-1, [0, 0, 0, 0, 4, 2, 0, 1, 0]),
    (1, [2, 0, 0, 0, 2, 0, 1, 2, 0]),
    (-1, [2, 2, 0, 0, 2, 0, 1, 0, 0]),
    (-1, [0, 0, 0, 0, 2, 0, 1, 2, 2]),
    (1, [0, 2, 0, 0, 2, 0, 1, 0, 2]),
    (2, [0, 0, 0, 0, 2, 2, 1, 1, 1]),
    (-2, [1, 1, 1, 0, 2, 2, 0, 0, 0]),
    (2, [0, 0, 0, 1, 3, 1, 0, 1, 1]),
    (-2, [0, 0, 0, 1, 3, 3, 0, 0, 0]),
    (2, [2, 0, 0, 1, 1, 1, 1, 1, 0]),
    (-2, [0, 0, 0, 1, 1, 1, 1, 1, 2]),
    (2, [0, 0, 0, 1, 1, 3, 1, 0, 1]),
    (-1, [0, 0, 2, 0, 0, 4, 0, 0, 1]),
    (-1, [0, 0, 0, 0, 2, 4, 1, 0, 0]),
    (1, [2, 0, 0, 0, 0, 2, 2, 1, 0]),
    (-1, [2, 0, 2, 0, 0, 2, 0, 1, 0]),
    (-1, [0, 0, 0, 0, 0, 2, 2, 1, 2]),
    (1, [0, 0, 2, 0, 0, 2, 0, 1, 2]),
    (1, [0, 0, 0, 0, 0, 4, 2, 0, 1]),
];

pub(crate) const CORRECTED_D: &[Term] = &[
    (-1, [2, 2, 2, 0, 0, 0, 0, 0, 0]),
    (1, [2, 2, 0, 0, 0, 0, 2, 0, 0]),
    (1, [2, 0, 2, 0, 0, 0, 0, 2, 0]),
    (1, [2, 0, 0, 2, 0, 0, 1, 1, 0]),
    (-1, [2, 0, 0, 0, 0, 0, 2, 2, 0]),
    (-2, [1, 1, 1, 1, 1, 1, 0, 0, 0]),
    (1, [0, 2, 2, 0, 0, 0, 0, 0, 2]),
    (1, [0, 2, 0, 0, 2, 0, 1, 0, 1]),
    (-1, [0, 2, 0, 0, 0, 0, 2, 0, 2]),
    (1, [0, 0, 2, 0, 0, 2, 0, 1, 1]),
    (-1, [0, 0, 2, 0, 0, 0, 0, 2, 2]),
    (-1, [0, 0, 0, 2, 2, 2, 0, 0, 0]),
    (1, [0, 0, 0, 2, 2, 0, 0, 1, 1]),
    (1, [0, 0, 0, 2, 0, 2, 1, 0, 1]),
    (-1, [0, 0, 0, 2, 0, 0, 1, 1, 2]),
    (1, [0, 0, 0, 0, 2, 2, 1, 1, 0]),
    (-1, [0, 0, 0, 0, 2, 0, 1, 2, 1]),
    (-1, [0, 0, 0, 0, 0, 2, 2, 1, 1]),
    (1, [0, 0, 0, 0, 0, 0, 2, 2, 2]),
];

pub(crate) const CORRECTED_P4: &[Term] = &[
    (-1, [2, 1, 1, 3, 0, 0, 0, 0, 0]),
    (1, [1, 2, 2, 0, 1, 1, 0, 0, 0]),
    (-1, [1, 2, 0, 1, 2, 0, 1, 0, 0]),
    (-1, [1, 2, 0, 0, 1, 1, 2, 0, 0]),
    (-1, [1, 0, 2, 1, 0, 2, 0, 1, 0]),
    (-1, [1, 0, 2, 0, 1, 1, 0, 2, 0]),
    (-1, [1, 0, 0, 4, 1, 1, 0, 0, 0]),
    (-1, [1, 0, 0, 3, 2, 0, 0, 1, 0]),
    (-1, [1, 0, 0, 3, 0, 2, 1, 0, 0]),
    (1, [1, 0, 0, 1, 2, 0, 1, 2, 0]),
    (1, [1, 0, 0, 1, 0, 2, 2, 1, 0]),
    (1, [1, 0, 0, 0, 1, 1, 2, 2, 0]),
    (1, [0, 1, 1, 3, 0, 0, 0, 0, 2]),
    (2, [0, 1, 1, 2, 1, 1, 0, 0, 1]),
    (1, [0, 1, 1, 1, 2, 2, 0, 0, 0]),
];

pub(crate) const CORRECTED_P5: &[Term] = &[
    (1, [2, 1, 2, 1, 0, 1, 0, 0, 0]),
    (-1, [2, 1, 0, 2, 1, 0, 1, 0, 0]),
    (-1, [2, 1, 0, 1, 0, 1, 2, 0, 0]),
    (-1, [1, 2, 1, 0, 3, 0, 0, 0, 0]),
    (1, [1, 0, 1, 2, 1, 2, 0, 0, 0]),
    (2, [1, 0, 1, 1, 2, 1, 0, 1, 0]),
    (1, [1, 0, 1, 0, 3, 0, 0, 2, 0]),
    (-1, [0, 1, 2, 1, 0, 1, 0, 0, 2]),
    (-1, [0, 1, 2, 0, 1, 2, 0, 0, 1]),
    (-1, [0, 1, 0, 2, 3, 0, 0, 0, 1]),
    (1, [0, 1, 0, 2, 1, 0, 1, 0, 2]),
    (-1, [0, 1, 0, 1, 4, 1, 0, 0, 0]),
    (1, [0, 1, 0, 1, 0, 1, 2, 0, 2]),
    (-1, [0, 1, 0, 0, 3, 2, 1, 0, 0]),
    (1, [0, 1, 0, 0, 1, 2, 2, 0, 1]),
];

pub(crate) const CORRECTED_P6: &[Term] = &[
    (1, [2, 2, 1, 1, 1, 0, 0, 0, 0]),
    (-1, [2, 0, 1, 2, 0, 1, 0, 1, 0]),
    (-1, [2, 0, 1, 1, 1, 0, 0, 2, 0]),
    (-1, [1, 1, 2, 0, 0, 3, 0, 0, 0]),
    (1, [1, 1, 0, 2, 2, 1, 0, 0, 0]),
    (2, [1, 1, 0, 1, 1, 2, 1, 0, 0]),
    (1, [1, 1, 0, 0, 0, 3, 2, 0, 0]),
    (-1, [0, 2, 1, 1, 1, 0, 0, 0, 2]),
    (-1, [0, 2, 1, 0, 2, 1, 0, 0, 1]),
    (-1, [0, 0, 1, 2, 0, 3, 0, 0, 1]),
    (1, [0, 0, 1, 2, 0, 1, 0, 1, 2]),
    (-1, [0, 0, 1, 1, 1, 4, 0, 0, 0]),
    (1, [0, 0, 1, 1, 1, 0, 0, 2, 2]),
    (-1, [0, 0, 1, 0, 2, 3, 0, 1, 0]),
    (1, [0, 0, 1, 0, 2, 1, 0, 2, 1]),
];

pub(crate) const CORRECTED_P7: &[Term] = &[
    (-1, [2, 0, 2, 2, 0, 0, 0, 1, 0]),
    (-1, [2, 0, 0, 4, 0, 0, 1, 0, 0]),
    (1, [2, 0, 0, 2, 0, 0, 2, 1, 0]),
    (-2, [1, 1, 1, 2, 2, 0, 0, 0, 0]),
    (-1, [0, 2, 2, 0, 2, 0, 0, 0, 1]),
    (-1, [0, 2, 0, 0, 4, 0, 1, 0, 0]),
    (1, [0, 2, 0, 0, 2, 0, 2, 0, 1]),
    (1, [0, 0, 2, 2, 0, 0, 0, 1, 2]),
    (2, [0, 0, 2, 1, 1, 1, 0, 1, 1]),
    (1, [0, 0, 2, 0, 2, 0, 0, 2, 1]),
    (-1, [0, 0, 0, 4, 2, 0, 0, 0, 1]),
    (1, [0, 0, 0, 4, 0, 0, 1, 0, 2]),
    (-2, [0, 0, 0, 3, 3, 1, 0, 0, 0]),
    (2, [0, 0, 0, 3, 1, 1, 1, 0, 1]),
    (-1, [0, 0, 0, 2, 4, 0, 0, 1, 0]),
    (2, [0, 0, 0, 2, 2, 0, 1, 1, 1]),
    (-1, [0, 0, 0, 2, 0, 0, 2, 1, 2]),
    (2, [0, 0, 0, 1, 3, 1, 1, 1, 0]),
    (-2, [0, 0, 0, 1, 1, 1, 2, 1, 1]),
    (1, [0, 0, 0, 0, 4, 0, 1, 2, 0]),
    (-1, [0, 0, 0, 0, 2, 0, 2, 2, 1]),
];

pub(crate) const CORRECTED_P8: &[Term] = &[
    (-1, [2, 2, 0, 2, 0, 0, 1, 0, 0]),
    (-1, [2, 0, 0, 4, 0, 0, 0, 1, 0]),
    (1, [2, 0, 0, 2, 0, 0, 1, 2, 0]),
    (-2, [1, 1, 1, 2, 0, 2, 0, 0, 0]),
    (-1, [0, 2, 2, 0, 0, 2, 0, 0, 1]),
    (1, [0, 2, 0, 2, 0, 0, 1, 0, 2]),
    (2, [0, 2, 0, 1, 1, 1, 1, 0, 1]),
    (1, [0, 2, 0, 0, 0, 2, 2, 0, 1]),
    (-1, [0, 0, 2, 0, 0, 4, 0, 1, 0]),
    (1, [0, 0, 2, 0, 0, 2, 0, 2, 1]),
    (-1, [0, 0, 0, 4, 0, 2, 0, 0, 1]),
    (1, [0, 0, 0, 4, 0, 0, 0, 1, 2]),
    (-2, [0, 0, 0, 3, 1, 3, 0, 0, 0]),
    (2, [0, 0, 0, 3, 1, 1, 0, 1, 1]),
    (-1, [0, 0, 0, 2, 0, 4, 1, 0, 0]),
    (2, [0, 0, 0, 2, 0, 2, 1, 1, 1]),
    (-1, [0, 0, 0, 2, 0, 0, 1, 2, 2]),
    (2, [0, 0, 0, 1, 1, 3, 1, 1, 0]),
    (-2, [0, 0, 0, 1, 1, 1, 1, 2, 1]),
    (1, [0, 0, 0, 0, 0, 4, 2, 1, 0]),
    (-1, [0, 0, 0, 0, 0, 2, 2, 2, 1]),
];

pub(crate) const CORRECTED_P9: &[Term] = &[
    (-1, [2, 2, 0, 0, 2, 0, 1, 0, 0]),
    (-1, [2, 0, 2, 0, 0, 2, 0, 1, 0]),
    (2, [2, 0, 0, 1, 1, 1, 1, 1, 0]),
    (1, [2, 0, 0, 0, 2, 0, 1, 2, 0]),
    (1, [2, 0, 0, 0, 0, 2, 2, 1, 0]),
    (-2, [1, 1, 1, 0, 2, 2, 0, 0, 0]),
    (-1, [0, 2, 0, 0, 4, 0, 0, 0, 1]),
    (1, [0, 2, 0, 0, 2, 0, 1, 0, 2]),
    (-1, [0, 0, 2, 0, 0, 4, 0, 0, 1]),
    (1, [0, 0, 2, 0, 0, 2, 0, 1, 2]),
    (-2, [0, 0, 0, 1, 3, 3, 0, 0, 0]),
    (2, [0, 0, 0, 1, 3, 1, 0, 1, 1]),
    (2, [0, 0, 0, 1, 1, 3, 1, 0, 1]),
    (-2, [0, 0, 0, 1, 1, 1, 1, 1, 2]),
    (-1, [0, 0, 0, 0, 4, 2, 0, 1, 0]),
    (1, [0, 0, 0, 0, 4, 0, 0, 2, 1]),
    (-1, [0, 0, 0, 0, 2, 4, 1, 0, 0]),
    (2, [0, 0, 0, 0, 2, 2, 1, 1, 1]),
    (-1, [0, 0, 0, 0, 2, 0, 1, 2, 2]),
    (1, [0, 0, 0, 0, 0, 4, 2, 0, 1]),
    (-1, [0, 0, 0, 0, 0, 2, 2, 1, 2]),
];
