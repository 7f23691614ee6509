use lcodes::tables;

#[test]
fn table1_matches_golden() {
    assert_eq!(tables::table1().unwrap(), tables::TABLE1);
}

#[test]
fn table2_matches_golden() {
    assert_eq!(tables::table2().unwrap(), tables::TABLE2);
}

#[test]
fn table3_matches_golden() {
    assert_eq!(tables::table3().unwrap(), tables::TABLE3);
}
