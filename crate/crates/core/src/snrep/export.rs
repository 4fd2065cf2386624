use super::{irr_multiplicities, GradedCharacter};
use crate::combel::character_table;
use crate::error::Result;

/// Header `degree, λ…` followed by one row of multiplicities per degree.
pub fn multiplicity_table(gc: &GradedCharacter) -> Result<(Vec<String>, Vec<Vec<String>>)> {
    let table = character_table(gc.n);
    let mut header = vec!["degree".to_string()];
    header.extend(table.partitions.iter().map(ToString::to_string));
    let rows = gc
        .pieces
        .iter()
        .map(|(d, chi)| {
            let m = irr_multiplicities(chi)?;
            let mut row = vec![d.to_string()];
            row.extend(m.values.iter().map(ToString::to_string));
            Ok(row)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((header, rows))
}

pub fn multiplicity_csv(gc: &GradedCharacter) -> Result<String> {
    let (header, rows) = multiplicity_table(gc)?;
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    Ok(String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::snrep::coinvariant_graded_character;

    #[test]
    fn csv_layout() {
        let gc = coinvariant_graded_character(3).unwrap();
        let csv = multiplicity_csv(&gc).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "degree,(3),\"(2,1)\",\"(1,1,1)\"");
        assert_eq!(lines[1], "0,1,0,0");
        assert_eq!(lines[4], "3,0,0,1");
        let mut reader = csv::Reader::from_reader(csv.as_bytes());
        assert_eq!(reader.headers().unwrap().len(), 4);
    }
}
