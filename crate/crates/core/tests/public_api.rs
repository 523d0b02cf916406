use pezzo::anticanon::{enumerate_anticanonical, reduce_to_negative_support, special_configs, DivisorConfig, ReduceError};
use pezzo::lct::{config_lct, expected_lct1, surface_lct, surface_lct1, Mode};
use pezzo::surface::{admissible_types, catalog_list, Catalog};
use pezzo::Rational;

#[test]
fn catalog_survives_a_json_round_trip() {
    let cat = Catalog::builtin();
    let text = serde_json::to_string(cat).unwrap();
    let again = Catalog::from_json(&text).unwrap();
    assert_eq!(&again, cat);
    for e in again.entries.iter().filter(|e| e.degree >= 4) {
        assert_eq!(e.build().unwrap().curves, cat.get(&e.id).unwrap().curves);
    }
}

#[test]
fn every_admissible_type_is_listed_once_per_degree_four_to_seven() {
    let listed = catalog_list();
    for d in 4..=7 {
        for t in admissible_types(d).unwrap() {
            let n = listed.iter().filter(|s| s.degree == d && s.singularity == t).count();
            assert_eq!(n, 1, "degree {d} {t}");
        }
    }
}

#[test]
fn reduction_leaves_only_negative_curves() {
    let mut reduced = 0;
    for e in Catalog::builtin().entries.iter().filter(|e| e.degree <= 3) {
        let m = e.build().unwrap();
        for cfg in special_configs(&m) {
            match reduce_to_negative_support(&cfg) {
                Ok(r) => {
                    assert!(r.extras().is_empty(), "{}: {r}", e.id);
                    assert_eq!(r.class_sum(), r.multiple() as i64 * &m.anticanonical());
                    reduced += 1;
                }
                Err(ReduceError::Blocked(_) | ReduceError::MultiplicityDropped { .. }) => {}
            }
        }
    }
    assert!(reduced > 0);
}

#[test]
fn pessimistic_geometry_never_raises_the_surface_value() {
    for e in Catalog::builtin().entries.iter().filter(|e| e.degree >= 4) {
        let m = e.build().unwrap();
        assert!(surface_lct(&m, Mode::Pessimistic).unwrap().value <= surface_lct1(&m).unwrap().value, "{}", e.id);
    }
}

#[test]
fn surface_value_is_attained_by_a_listed_divisor() {
    let m = Catalog::builtin().get("d5-A4").unwrap();
    let r = surface_lct1(&m).unwrap();
    assert_eq!(r.value, expected_lct1(5, &m.singularity).unwrap());
    let best = enumerate_anticanonical(&m)
        .iter()
        .map(|c| config_lct(c, Mode::DefaultSnc).unwrap().value)
        .min()
        .unwrap();
    assert_eq!(best, Rational::new(1, 6));
}

#[test]
fn configs_can_be_rebuilt_from_coefficients() {
    let m = Catalog::builtin().get("d4-D5").unwrap();
    for cfg in enumerate_anticanonical(&m) {
        let again = DivisorConfig::on_curves(&m, cfg.mult().to_vec()).unwrap();
        assert_eq!(again.to_string(), cfg.to_string());
    }
}
