use permgraph_web::{boxcar_layout_json, count_table_json, permutation_json};
use serde_json::Value;

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn boxcar_layout() {
    let v = parse(&boxcar_layout_json("2,3").unwrap());
    assert_eq!(v["order"], 20);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 20);
    assert_eq!(v["edges"].as_array().unwrap().len(), 30);
    assert_eq!(v["realizer"].as_array().unwrap().len(), 20);
    assert_eq!(v["hamiltonian_path"].as_array().unwrap().len(), 20);
    assert_eq!(v["planar"], true);
    assert!(boxcar_layout_json("2,4").is_err());
    assert_eq!(parse(&boxcar_layout_json("-").unwrap())["order"], 10);
}

#[test]
fn permutation_view() {
    let v = parse(&permutation_json("[5,4,7,2,1,10,3,12,11,6,9,8]").unwrap());
    assert_eq!(v["order"], 12);
    assert_eq!(v["quotient_order"], 8);
    assert_eq!(v["path_blowup"], Value::Null);
    let k4 = parse(&permutation_json("4,3,2,1").unwrap());
    assert_eq!(k4["cubic_class"], "K4");
    assert_eq!(k4["twin_classes"][0]["kind"], "K");
    assert!(permutation_json("1,1").is_err());
}

#[test]
fn counts() {
    let v = parse(&count_table_json(28).unwrap());
    let counts: Vec<&str> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["count"].as_str().unwrap())
        .collect();
    assert_eq!(
        counts,
        ["1", "1", "0", "1", "0", "1", "1", "1", "1", "2", "2", "3", "3"]
    );
    assert_eq!(v["rows"][10]["sequences"][1], "2,3,2");
    assert!(count_table_json(1000).is_err());
}
