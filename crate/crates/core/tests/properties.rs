use num_bigint::BigUint;
use num_rational::Rational64;
use proptest::prelude::*;

use subfield_metric::cli::{CodeFile, CodeSpec};
use subfield_metric::codes::{trace_symplectic_dual, AdditiveCode, Code, LinearCode};
use subfield_metric::decoding::{decode_nearest, guaranteed_radius};
use subfield_metric::enumerator::{enumerator_from_code, macwilliams_transform};
use subfield_metric::gf::{Field, Gf, Notation};
use subfield_metric::metric::{
    br_weight, hamming_weight, lambda_distance, lambda_weight, pareto_minima, rank_weight, BRWeight, Lambda,
};
use subfield_metric::bounds::BoundReport;
use subfield_metric::volume::{ball_size, ball_size_double_sum, Alphabet};

const CAP: u64 = 1 << 20;

fn f4() -> Field {
    Field::new(2, 1, 2, None).unwrap()
}

fn f16_over_f4() -> Field {
    Field::new(2, 2, 2, None).unwrap()
}

fn f9() -> Field {
    Field::new(3, 1, 2, None).unwrap()
}

fn lambdas() -> impl Strategy<Value = Lambda> {
    prop_oneof![
        Just(Lambda::one()),
        Just(Lambda::new(3, 2).unwrap()),
        Just(Lambda::integer(2).unwrap()),
        Just(Lambda::integer(3).unwrap()),
    ]
}

fn vector(size: u64, n: usize) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(0..size, n)
}

fn elems(field: &Field, codes: &[u64]) -> Vec<Gf> {
    codes.iter().map(|&c| field.elem(c).unwrap()).collect()
}

proptest! {
    #[test]
    fn field_laws(a in 0u64..16, b in 0u64..16, c in 0u64..16) {
        for field in [f16_over_f4(), f9()] {
            let s = field.size();
            let (a, b, c) = (field.elem(a % s).unwrap(), field.elem(b % s).unwrap(), field.elem(c % s).unwrap());
            prop_assert_eq!(field.mul(a, field.add(b, c)), field.add(field.mul(a, b), field.mul(a, c)));
            prop_assert_eq!(field.mul(field.mul(a, b), c), field.mul(a, field.mul(b, c)));
            prop_assert_eq!(field.sub(field.add(a, b), b), a);
            if !a.is_zero() {
                prop_assert_eq!(field.mul(a, field.inv(a).unwrap()), field.constant(1));
            }
            let t = field.add(a, b);
            prop_assert_eq!(field.absolute_trace(t), (field.absolute_trace(a) + field.absolute_trace(b)) % field.characteristic());
        }
    }

    #[test]
    fn element_text_round_trip(x in 0u64..16) {
        let field = f16_over_f4();
        let x = field.elem(x).unwrap();
        for notation in [Notation::Power, Notation::Integer] {
            let text = field.format_element(x, notation);
            prop_assert_eq!(field.parse_element(&text).unwrap(), x);
        }
    }

    #[test]
    fn pair_round_trip(x in 0u64..16) {
        let field = f16_over_f4();
        let x = field.elem(x).unwrap();
        let gamma = field.primitive_element();
        let (a, b) = field.decompose_pair(x, gamma).unwrap();
        prop_assert!(field.is_base_element(a) && field.is_base_element(b));
        prop_assert_eq!(field.compose_pair(a, b, gamma), x);
    }

    #[test]
    fn weights_are_consistent(v in vector(16, 6), lambda in lambdas()) {
        let field = f16_over_f4();
        let v = elems(&field, &v);
        let br = br_weight(&field, &v);
        prop_assert_eq!(br.hamming(), hamming_weight(&v));
        prop_assert_eq!(lambda_weight(&field, &v, lambda), br.lambda_value(lambda));
        prop_assert!(rank_weight(&field, &v) <= hamming_weight(&v).min(field.m() as usize));
    }

    #[test]
    fn lambda_distance_is_a_metric(
        x in vector(4, 5), y in vector(4, 5), z in vector(4, 5), lambda in lambdas()
    ) {
        let field = f4();
        let (x, y, z) = (elems(&field, &x), elems(&field, &y), elems(&field, &z));
        let dxy = lambda_distance(&field, &x, &y, lambda).unwrap();
        let dyz = lambda_distance(&field, &y, &z, lambda).unwrap();
        let dxz = lambda_distance(&field, &x, &z, lambda).unwrap();
        prop_assert_eq!(dxy, lambda_distance(&field, &y, &x, lambda).unwrap());
        prop_assert_eq!(dxy.is_zero(), x == y);
        prop_assert!(dxz.value() <= dxy.value() + dyz.value());
    }

    #[test]
    fn pareto_minima_cover_input(points in prop::collection::vec((0usize..8, 0usize..8), 1..12)) {
        let set: Vec<BRWeight> = points.iter().map(|&(s, t)| BRWeight::new(s, t)).collect();
        let minima = pareto_minima(set.iter().copied()).unwrap();
        for p in &set {
            prop_assert!(minima.iter().any(|m| m.precedes_or_equals(*p)));
        }
        for a in &minima {
            prop_assert!(set.contains(a));
            for b in &minima {
                prop_assert!(a == b || !a.precedes_or_equals(*b));
            }
        }
    }

    #[test]
    fn ball_sum_forms_agree(n in 1usize..9, r in 0u64..12, lambda in 1u64..4, q in prop_oneof![Just(2u64), Just(3)], m in 1u32..4) {
        let a = Alphabet::new(q, m).unwrap();
        let l = Lambda::integer(lambda as i64).unwrap();
        let exact = ball_size(n, Rational64::from_integer(r as i64), l, a);
        prop_assert_eq!(&exact, &ball_size_double_sum(n, r, lambda, a));
        let next = ball_size(n, Rational64::from_integer(r as i64 + 1), l, a);
        prop_assert!(next >= exact);
        prop_assert!(exact <= a.space_size(n));
    }

    #[test]
    fn gv_below_upper_bounds(n in 1usize..30, d in 1i64..12, lambda in lambdas(), m in 1u32..4) {
        let a = Alphabet::new(2, m).unwrap();
        let report = BoundReport::compute(n, Rational64::from_integer(d), lambda, a);
        for (_, upper) in report.upper_bounds() {
            prop_assert!(report.gilbert_varshamov.raw <= upper.raw, "n={} d={}", n, d);
        }
    }

    #[test]
    fn code_file_round_trip(rows in prop::collection::vec(vector(16, 4), 1..4), additive in any::<bool>()) {
        let field = f16_over_f4();
        let rows: Vec<Vec<Gf>> = rows.iter().map(|r| elems(&field, r)).collect();
        let file = if additive {
            CodeFile::additive(&field, Some(field.primitive_element()), 4, rows)
        } else {
            CodeFile { field: field.clone(), gamma: None, n: None, code: CodeSpec::Generator(rows) }
        };
        let text = file.to_string();
        prop_assert_eq!(CodeFile::parse(&text).unwrap(), file);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn macwilliams_matches_dual_enumeration(rows in prop::collection::vec(vector(4, 4), 1..4)) {
        let field = f4();
        let rows: Vec<Vec<Gf>> = rows.iter().map(|r| elems(&field, r)).collect();
        let code = AdditiveCode::new(&field, 4, rows).unwrap();
        let w = enumerator_from_code(&code, CAP, 1).unwrap();
        let size = BigUint::from(1u32) << code.log_size();
        let dual = trace_symplectic_dual(&code, field.primitive_element()).unwrap();
        let w_dual = enumerator_from_code(&dual, CAP, 1).unwrap();
        let transformed = macwilliams_transform(&w, &size, field.q()).unwrap();
        prop_assert_eq!(&transformed, &w_dual);
        let dual_size = BigUint::from(1u32) << dual.log_size();
        prop_assert_eq!(macwilliams_transform(&transformed, &dual_size, field.q()).unwrap(), w);
    }

    #[test]
    fn decoding_inside_radius(info in 0u64..4, err in vector(4, 6), lambda in lambdas()) {
        let field = f4();
        let a = field.primitive_element();
        let one = field.constant(1);
        let code = LinearCode::from_generator(&field, vec![vec![one, one, one, a, a, a]]).unwrap();
        let d = subfield_metric::codes::min_lambda_distance(&code, lambda, CAP).unwrap().unwrap();
        let radius = guaranteed_radius(code.length(), d, lambda);
        let sent = code.encode(&[field.elem(info).unwrap()]).unwrap();
        let e = elems(&field, &err);
        prop_assume!(lambda_weight(&field, &e, lambda).value() <= radius.value());
        let received: Vec<Gf> = sent.iter().zip(&e).map(|(&x, &y)| field.add(x, y)).collect();
        let r = decode_nearest(&code, &received, lambda, CAP).unwrap();
        prop_assert!(r.unique);
        prop_assert_eq!(r.codeword, sent);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn dual_enumerator_ignores_gamma(rows in prop::collection::vec(vector(16, 3), 1..3)) {
        let field = f16_over_f4();
        let rows: Vec<Vec<Gf>> = rows.iter().map(|r| elems(&field, r)).collect();
        let code = AdditiveCode::new(&field, 3, rows).unwrap();
        let mut seen = None;
        for gamma in field.elements().filter(|&g| !field.is_base_element(g)) {
            let w = enumerator_from_code(&trace_symplectic_dual(&code, gamma).unwrap(), CAP, 1).unwrap();
            match &seen {
                None => seen = Some(w),
                Some(first) => prop_assert_eq!(first, &w),
            }
        }
    }
}

#[test]
fn cyclic_17_dual_enumerator_ignores_gamma() {
    let file = CodeFile::parse(&std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/gf2_17.code")).unwrap()).unwrap();
    let code = file.build().unwrap();
    let field = file.field.clone();
    let a = field.primitive_element();
    let w1 = enumerator_from_code(&trace_symplectic_dual(&code, a).unwrap(), CAP, 2).unwrap();
    let w2 = enumerator_from_code(&trace_symplectic_dual(&code, field.mul(a, a)).unwrap(), CAP, 2).unwrap();
    assert_eq!(w1, w2);
    assert_eq!(w1.coefficient(5, 2), BigUint::from(0u32));
    assert_eq!(w1.coefficient(6, 2), BigUint::from(68u32));
}
