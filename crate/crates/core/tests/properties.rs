// Copyright 2026 The stabilizer-locality Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use stabilizer_locality::canonical::canonicalize;
use stabilizer_locality::classify::{classify, singleton_check};
use stabilizer_locality::codes::{random_stabilizer_code, StabilizerCode};
use stabilizer_locality::entropy::{entropy_bounds, entropy_of_state, GroundStateSpec};
use stabilizer_locality::oracle::{brute_distance, brute_localized_count, OracleBudget};
use stabilizer_locality::pauli::{GeneratorList, PauliOperator, QubitSubset};

fn code_and_region(max_n: usize) -> impl Strategy<Value = (StabilizerCode, QubitSubset)> {
    (2..=max_n)
        .prop_flat_map(|n| (Just(n), 1..n, any::<u64>(), proptest::collection::vec(any::<bool>(), n)))
        .prop_map(|(n, g, seed, mask)| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let code = random_stabilizer_code(n, g, &mut rng).unwrap();
            let a = QubitSubset::new(n, (0..n).filter(|&q| mask[q])).unwrap();
            (code, a)
        })
}

fn pauli(n: usize) -> impl Strategy<Value = PauliOperator> {
    proptest::collection::vec(prop_oneof![Just('I'), Just('X'), Just('Y'), Just('Z')], n)
        .prop_map(|v| v.into_iter().collect::<String>().parse().unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn counts_satisfy_the_identities((code, a) in code_and_region(9)) {
        let c = classify(&code, &a).unwrap().counts;
        prop_assert_eq!(c.g_a + c.g_b, 2 * c.k);
        prop_assert_eq!(c.m_ab, c.m_phi);
        prop_assert_eq!(c.g_a, c.m_a + c.m_ab);
    }

    #[test]
    fn complement_swaps_sides((code, a) in code_and_region(8)) {
        let x = classify(&code, &a).unwrap().counts;
        let y = classify(&code, &a.complement()).unwrap().counts;
        prop_assert_eq!((x.g_a, x.g_b, x.m_a, x.m_b, x.m_ab), (y.g_b, y.g_a, y.m_b, y.m_a, y.m_ab));
    }

    #[test]
    fn representatives_are_logical_and_placed((code, a) in code_and_region(8)) {
        let r = classify(&code, &a).unwrap();
        let b = a.complement();
        for (_, op) in r.logical_representatives() {
            prop_assert!(code.is_logical(op).unwrap(), "{} is not logical", op);
        }
        for (l, lp) in &r.mab_pairs {
            prop_assert!(l.supported_in(&a) && lp.supported_in(&b));
            prop_assert!(code.in_stabilizer(&l.multiply(lp).unwrap()).unwrap());
        }
        for (x, y) in &r.alpha_pairs {
            prop_assert!(x.supported_in(&a) && y.supported_in(&a) && !x.commutes(y).unwrap());
        }
        for (x, y) in &r.beta_pairs {
            prop_assert!(x.supported_in(&b) && y.supported_in(&b) && !x.commutes(y).unwrap());
        }
    }

    #[test]
    fn state_entropy_lies_within_bounds((code, a) in code_and_region(8)) {
        let r = classify(&code, &a).unwrap();
        let bounds = entropy_bounds(&code, &a).unwrap();
        for fixed in [r.min_entropy_logicals(), r.max_entropy_logicals()] {
            let spec = GroundStateSpec::new(code.clone(), fixed).unwrap();
            let e = entropy_of_state(&spec, &a).unwrap();
            prop_assert!(bounds.e_min <= e && e <= bounds.e_max);
            prop_assert_eq!(e, entropy_of_state(&spec, &a.complement()).unwrap());
        }
    }

    #[test]
    fn oracle_agrees_on_small_regions((code, a) in code_and_region(7)) {
        let g = brute_localized_count(&code, &a, &OracleBudget::default()).unwrap();
        prop_assert_eq!(g, classify(&code, &a).unwrap().counts.g_a);
    }

    #[test]
    fn distance_respects_singleton((code, _) in code_and_region(6)) {
        let d = brute_distance(&code, &OracleBudget::default()).unwrap();
        prop_assert!(singleton_check(&code, d).unwrap());
    }

    #[test]
    fn canonical_form_is_canonical(ops in (1usize..=6).prop_flat_map(|n| proptest::collection::vec(pauli(n), 1..10))) {
        let n = ops[0].n();
        let gens = GeneratorList::new(n, ops).unwrap();
        let form = canonicalize(&gens);
        prop_assert!(form.check_structure().is_ok());
        prop_assert_eq!(form.rank(), gens.rank());
        for g in gens.iter() {
            prop_assert!(form.contains(g));
        }
    }
}
