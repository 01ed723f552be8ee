//! Multiplication tables, cohomology tables and automorphism families.

use super::{CohomologyData, EntryData, FamilyData, ProvenanceData};

pub const ENTRIES: &[EntryData] = &[
    EntryData {
        name: "B2_01",
        params: &[],
        nonzero: &[],
        table: "e1 e1 = e2",
        provenance: None,
    },
    EntryData {
        name: "B3_01",
        params: &[],
        nonzero: &[],
        table: "e1 e1 = e2; e2 e1 = e3",
        provenance: Some(ProvenanceData {
            parent: "B2_01",
            parent_bindings: &[],
            cocycles: &["D(2,1)"],
        }),
    },
    EntryData {
        name: "B3_02",
        params: &["lambda"],
        nonzero: &[],
        table: "e1 e1 = e2; e1 e2 = e3; e2 e1 = lambda e3",
        provenance: Some(ProvenanceData {
            parent: "B2_01",
            parent_bindings: &[],
            cocycles: &["D(1,2) + lambda*D(2,1)"],
        }),
    },
    EntryData {
        name: "B4_01",
        params: &[],
        nonzero: &[],
        table: "e1 e1 = e2; e1 e2 = e4; e2 e1 = e3",
        provenance: Some(ProvenanceData {
            parent: "B2_01",
            parent_bindings: &[],
            cocycles: &["D(2,1)", "D(1,2)"],
        }),
    },
    EntryData {
        name: "B4_02",
        params: &[],
        nonzero: &[],
        table: "e1 e1 = e2; e1 e2 = e4; e2 e1 = e3; e3 e1 = e4",
        provenance: Some(ProvenanceData {
            parent: "B3_01",
            parent_bindings: &[],
            cocycles: &["D(1,2) + D(3,1)"],
        }),
    },
    EntryData {
        name: "B4_03",
        params: &[],
        nonzero: &[],
        table: "e1 e1 = e2; e2 e1 = e3; e3 e1 = e4",
        provenance: Some(ProvenanceData {
            parent: "B3_01",
            parent_bindings: &[],
            cocycles: &["D(3,1)"],
        }),
    },
    EntryData {
        name: "B4_04",
        params: &[],
        nonzero: &[],
        table: "e1 e1 = e2; e1 e2 = e3; e1 e3 = e4; e2 e1 = e4",
        provenance: Some(ProvenanceData {
            parent: "B3_02",
            parent_bindings: &[("lambda", "0")],
            cocycles: &["D(1,3) + D(2,1)"],
        }),
    },
    EntryData {
        name: "B4_05",
        params: &[],
        nonzero: &[],
        table: "e1 e1 = e2; e1 e2 = e3; e1 e3 = e4; e2 e1 = e3 + e4; e2 e2 = e4; e3 e1 = e4",
        provenance: Some(ProvenanceData {
            parent: "B3_02",
            parent_bindings: &[("lambda", "1")],
            cocycles: &["D(1,3) + D(2,1) + D(2,2) + D(3,1)"],
        }),
    },
    EntryData {
        name: "B4_06",
        params: &["lambda"],
        nonzero: &[],
        table: "e1 e1 = e2; e1 e2 = e3; e1 e3 = e4; e2 e1 = lambda e3; e2 e2 = lambda e4; e3 e1 = lambda e4",
        provenance: Some(ProvenanceData {
            parent: "B3_02",
            parent_bindings: &[("lambda", "lambda")],
            cocycles: &["D(1,3) + lambda*D(2,2) + lambda*D(3,1)"],
        }),
    },
    EntryData {
        name: "B5_01",
        params: &[],
        nonzero: &[],
        table: "e1 e1 = e2; e1 e2 = e4; e2 e1 = e3; e3 e1 = e5",
        provenance: Some(ProvenanceData {
            parent: "B3_01",
            parent_bindings: &[],
            cocycles: &["D(1,2)", "D(3,1)"],
        }),
    },
    EntryData {
        name: "B5_02",
        params: &["lambda"],
        nonzero: &[],
        table: "e1 e1 = e2; e1 e2 = e3; e1 e3 = e5; e2 e1 = lambda e3 + e4; e2 e2 = lambda e5; e3 e1 = lambda e5",
        provenance: Some(ProvenanceData {
            parent: "B3_02",
            parent_bindings: &[("lambda", "lambda")],
            cocycles: &["D(2,1)", "D(1,3) + lambda*D(2,2) + lambda*D(3,1)"],
        }),
    },
    EntryData {
        name: "B5_03",
        params: &["lambda", "mu"],
        nonzero: &[],
        table: "e1 e1 = e2; e1 e2 = e4; e1 e3 = e5; e1 e4 = lambda e5; e2 e1 = e3; e2 e2 = e5; e3 e1 = mu e5; e4 e1 = e5",
        provenance: Some(ProvenanceData {
            parent: "B4_01",
            parent_bindings: &[],
            cocycles: &["lambda*N(1) + mu*N(2) + N(3)"],
        }),
    },
    EntryData {
        name: "B5_04",
        params: &["lambda"],
        nonzero: &[],
        table: "e1 e1 = e2; e1 e2 = e4; e1 e4 = e5; e2 e1 = e3; e3 e1 = lambda e5",
        provenance: Some(ProvenanceData {
            parent: "B4_01",
            parent_bindings: &[],
            cocycles: &["N(1) + lambda*N(2)"],
        }),
    },
    EntryData {
        name: "B5_05",
        params: &[],
        nonzero: &[],
        table: "e1 e1 = e2; e1 e2 = e4; e1 e3 = e5; e2 e1 = e3; e2 e2 = e5; e3 e1 = e4; e4 e1 = e5",
        provenance: Some(ProvenanceData {
            parent: "B4_02",
            parent_bindings: &[],
            cocycles: &["N(2)"],
        }),
    },
    EntryData {
        name: "B5_06",
        params: &[],
        nonzero: &[],
        table: "e1 e1 = e2; e1 e2 = e5; e2 e1 = e3; e3 e1 = e4; e4 e1 = e5",
        provenance: Some(ProvenanceData {
            parent: "B4_03",
            parent_bindings: &[],
            cocycles: &["N(1) + N(2)"],
        }),
    },
    EntryData {
        name: "B5_07",
        params: &[],
        nonzero: &[],
        table: "e1 e1 = e2; e2 e1 = e3; e3 e1 = e4; e4 e1 = e5",
        provenance: Some(ProvenanceData {
            parent: "B4_03",
            parent_bindings: &[],
            cocycles: &["N(2)"],
        }),
    },
    EntryData {
        name: "B5_08",
        params: &[],
        nonzero: &[],
        table: "e1 e1 = e2; e1 e2 = e3; e1 e3 = e4; e1 e4 = e5; e2 e1 = e4; e2 e2 = e5; e3 e1 = e5",
        provenance: Some(ProvenanceData {
            parent: "B4_04",
            parent_bindings: &[],
            cocycles: &["N(2)"],
        }),
    },
    EntryData {
        name: "B5_09",
        params: &[],
        nonzero: &[],
        table: "e1 e1 = e2; e1 e2 = e3; e1 e3 = e4; e1 e4 = e5; e2 e1 = e3 + e4; e2 e2 = e4 + e5; e2 e3 = e5; e3 e1 = e4 + e5; e3 e2 = e5; e4 e1 = e5",
        provenance: Some(ProvenanceData {
            parent: "B4_05",
            parent_bindings: &[],
            cocycles: &["N(2)"],
        }),
    },
    EntryData {
        name: "B5_10",
        params: &["lambda"],
        nonzero: &[],
        table: "e1 e1 = e2; e1 e2 = e3; e1 e3 = e4; e1 e4 = e5; e2 e1 = lambda e3; e2 e2 = lambda e4; e2 e3 = lambda e5; e3 e1 = lambda e4; e3 e2 = lambda e5; e4 e1 = lambda e5",
        provenance: Some(ProvenanceData {
            parent: "B4_06",
            parent_bindings: &[("lambda", "lambda")],
            cocycles: &["N(2)"],
        }),
    },
    EntryData {
        name: "B5_11",
        params: &[],
        nonzero: &[],
        table: "e1 e1 = e2; e1 e2 = e3; e1 e3 = e4; e1 e4 = e5; e2 e1 = e5",
        provenance: Some(ProvenanceData {
            parent: "B4_06",
            parent_bindings: &[("lambda", "0")],
            cocycles: &["N(1) + N(2)"],
        }),
    },
    EntryData {
        name: "B5_12",
        params: &[],
        nonzero: &[],
        table: "e1 e1 = e2; e1 e2 = e3; e1 e3 = e4; e1 e4 = e5; e2 e1 = e3 + e5; e2 e2 = e4; e2 e3 = e5; e3 e1 = e4; e3 e2 = e5; e4 e1 = e5",
        provenance: Some(ProvenanceData {
            parent: "B4_06",
            parent_bindings: &[("lambda", "1")],
            cocycles: &["N(1) + N(2)"],
        }),
    },
    EntryData {
        name: "B6_01",
        params: &[],
        nonzero: &[],
        table: "e1 e1 = e2; e1 e2 = e4; e1 e4 = e5; e2 e1 = e3; e3 e1 = e6",
        provenance: Some(ProvenanceData {
            parent: "B4_01",
            parent_bindings: &[],
            cocycles: &["N(1)", "N(2)"],
        }),
    },
    EntryData {
        name: "B6_02",
        params: &["lambda"],
        nonzero: &[],
        table: "e1 e1 = e2; e1 e2 = e4; e1 e3 = e6; e1 e4 = e5; e2 e1 = e3; e2 e2 = e6; e3 e1 = lambda e6; e4 e1 = e6",
        provenance: Some(ProvenanceData {
            parent: "B4_01",
            parent_bindings: &[],
            cocycles: &["N(1)", "lambda*N(2) + N(3)"],
        }),
    },
    EntryData {
        name: "B6_03",
        params: &["lambda", "mu"],
        nonzero: &[],
        table: "e1 e1 = e2; e1 e2 = e4; e1 e3 = e6; e1 e4 = lambda e5 + mu e6; e2 e1 = e3; e2 e2 = e6; e3 e1 = e5; e4 e1 = e6",
        provenance: Some(ProvenanceData {
            parent: "B4_01",
            parent_bindings: &[],
            cocycles: &["lambda*N(1) + N(2)", "mu*N(1) + N(3)"],
        }),
    },
    EntryData {
        name: "B6_04",
        params: &[],
        nonzero: &[],
        table: "e1 e1 = e2; e1 e2 = e4; e1 e3 = e6; e2 e1 = e3; e2 e2 = e6; e3 e1 = e4 + e5; e4 e1 = e6",
        provenance: Some(ProvenanceData {
            parent: "B4_02",
            parent_bindings: &[],
            cocycles: &["N(1)", "N(2)"],
        }),
    },
    EntryData {
        name: "B6_05",
        params: &[],
        nonzero: &[],
        table: "e1 e1 = e2; e1 e2 = e5; e2 e1 = e3; e3 e1 = e4; e4 e1 = e6",
        provenance: Some(ProvenanceData {
            parent: "B4_03",
            parent_bindings: &[],
            cocycles: &["N(1)", "N(2)"],
        }),
    },
    EntryData {
        name: "B6_06",
        params: &[],
        nonzero: &[],
        table: "e1 e1 = e2; e1 e2 = e3; e1 e3 = e4; e1 e4 = e6; e2 e1 = e4 + e5; e2 e2 = e6; e3 e1 = e6",
        provenance: Some(ProvenanceData {
            parent: "B4_04",
            parent_bindings: &[],
            cocycles: &["N(1)", "N(2)"],
        }),
    },
    EntryData {
        name: "B6_07",
        params: &[],
        nonzero: &[],
        table: "e1 e1 = e2; e1 e2 = e3; e1 e3 = e4; e1 e4 = e6; e2 e1 = e3 + e4 + e5; e2 e2 = e4 + e6; e2 e3 = e6; e3 e1 = e4 + e6; e3 e2 = e6; e4 e1 = e6",
        provenance: Some(ProvenanceData {
            parent: "B4_05",
            parent_bindings: &[],
            cocycles: &["N(1)", "N(2)"],
        }),
    },
    EntryData {
        name: "B6_08",
        params: &["lambda"],
        nonzero: &[],
        table: "e1 e1 = e2; e1 e2 = e3; e1 e3 = e4; e1 e4 = e6; e2 e1 = lambda e3 + e5; e2 e2 = lambda e4; e2 e3 = lambda e6; e3 e1 = lambda e4; e3 e2 = lambda e6; e4 e1 = lambda e6",
        provenance: Some(ProvenanceData {
            parent: "B4_06",
            parent_bindings: &[("lambda", "lambda")],
            cocycles: &["N(1)", "N(2)"],
        }),
    },
    EntryData {
        name: "B6_09",
        params: &["lambda"],
        nonzero: &[],
        table: "e1 e1 = e2; e1 e2 = e4; e1 e3 = e6; e1 e4 = lambda e6; e2 e1 = e3; e2 e2 = e6; e3 e1 = e5; e4 e1 = e6; e5 e1 = e6",
        provenance: Some(ProvenanceData {
            parent: "B5_01",
            parent_bindings: &[],
            cocycles: &["lambda*N(1) + N(2) + N(3)"],
        }),
    },
    EntryData {
        name: "B6_10",
        params: &[],
        nonzero: &[],
        table: "e1 e1 = e2; e1 e2 = e4; e1 e4 = e6; e2 e1 = e3; e3 e1 = e5; e5 e1 = e6",
        provenance: Some(ProvenanceData {
            parent: "B5_01",
            parent_bindings: &[],
            cocycles: &["N(1) + N(2)"],
        }),
    },
    EntryData {
        name: "B6_11",
        params: &[],
        nonzero: &[],
        table: "e1 e1 = e2; e1 e2 = e4; e2 e1 = e3; e3 e1 = e5; e5 e1 = e6",
        provenance: Some(ProvenanceData {
            parent: "B5_01",
            parent_bindings: &[],
            cocycles: &["N(2)"],
        }),
    },
    EntryData {
        name: "B6_12",
        params: &["lambda"],
        nonzero: &[],
        table: "e1 e1 = e2; e1 e2 = e3; e1 e3 = e5; e1 e5 = e6; e2 e1 = lambda e3 + e4; e2 e2 = lambda e5; e2 e3 = lambda e6; e3 e1 = lambda e5; e3 e2 = lambda e6; e5 e1 = lambda e6",
        provenance: Some(ProvenanceData {
            parent: "B5_02",
            parent_bindings: &[("lambda", "lambda")],
            cocycles: &["N(3)"],
        }),
    },
    EntryData {
        name: "B6_13",
        params: &["lambda"],
        nonzero: &[],
        table: "e1 e1 = e2; e1 e2 = e3; e1 e3 = e5; e1 e5 = e6; e2 e1 = lambda e3 + e4; e2 e2 = lambda e5; e2 e3 = lambda e6; e3 e1 = lambda e5; e3 e2 = lambda e6; e4 e1 = e6; e5 e1 = lambda e6",
        provenance: Some(ProvenanceData {
            parent: "B5_02",
            parent_bindings: &[("lambda", "lambda")],
            cocycles: &["N(1) + N(3)"],
        }),
    },
    EntryData {
        name: "B6_14",
        params: &["lambda"],
        nonzero: &[],
        table: "e1 e1 = e2; e1 e2 = e3; e1 e3 = e5; e1 e4 = e6; e1 e5 = e6; e2 e1 = e4; e2 e2 = e6; e3 e1 = e6; e4 e1 = lambda e6",
        provenance: Some(ProvenanceData {
            parent: "B5_02",
            parent_bindings: &[("lambda", "0")],
            cocycles: &["lambda*N(1) + N(2) + N(3)"],
        }),
    },
    EntryData {
        name: "B6_15",
        params: &["lambda"],
        nonzero: &[],
        table: "e1 e1 = e2; e1 e2 = e3; e1 e3 = e5; e1 e4 = e6; e1 e5 = e6; e2 e1 = e3 + e4; e2 e2 = e5 + e6; e2 e3 = e6; e3 e1 = e5 + e6; e3 e2 = e6; e4 e1 = lambda e6; e5 e1 = e6",
        provenance: Some(ProvenanceData {
            parent: "B5_02",
            parent_bindings: &[("lambda", "1")],
            cocycles: &["lambda*N(1) + N(2) + N(3)"],
        }),
    },
    EntryData {
        name: "B6_16",
        params: &["lambda"],
        nonzero: &["lambda"],
        table: "e1 e1 = e2; e1 e2 = e4; e1 e3 = e5; e1 e4 = lambda e5; e1 e5 = lambda e6; e2 e1 = e3; e2 e2 = e5; e2 e3 = e6; e2 e4 = lambda e6; e3 e1 = (1/lambda) e5; e3 e2 = e6; e4 e1 = e5; e4 e2 = lambda e6; e5 e1 = e6",
        provenance: Some(ProvenanceData {
            parent: "B5_03",
            parent_bindings: &[("lambda", "lambda"), ("mu", "1/lambda")],
            cocycles: &["N(3)"],
        }),
    },
    EntryData {
        name: "B6_17",
        params: &["lambda"],
        nonzero: &["lambda"],
        table: "e1 e1 = e2; e1 e2 = e4; e1 e3 = e5; e1 e4 = lambda e5 + e6; e1 e5 = lambda e6; e2 e1 = e3; e2 e2 = e5; e2 e3 = e6; e2 e4 = lambda e6; e3 e1 = (1/lambda) e5; e3 e2 = e6; e4 e1 = e5; e4 e2 = lambda e6; e5 e1 = e6",
        provenance: Some(ProvenanceData {
            parent: "B5_03",
            parent_bindings: &[("lambda", "lambda"), ("mu", "1/lambda")],
            cocycles: &["N(1) + N(3)"],
        }),
    },
    EntryData {
        name: "B6_18",
        params: &["lambda"],
        nonzero: &[],
        table: "e1 e1 = e2; e1 e2 = e4; e1 e3 = e5; e1 e4 = e5 + lambda e6; e1 e5 = e6; e2 e1 = e3; e2 e2 = e5; e2 e3 = e6; e2 e4 = e6; e3 e1 = e5 + e6; e3 e2 = e6; e4 e1 = e5; e4 e2 = e6; e5 e1 = e6",
        provenance: Some(ProvenanceData {
            parent: "B5_03",
            parent_bindings: &[("lambda", "1"), ("mu", "1")],
            cocycles: &["lambda*N(1) + N(2) + N(3)"],
        }),
    },
    EntryData {
        name: "B6_19",
        params: &[],
        nonzero: &[],
        table: "e1 e1 = e2; e1 e2 = e4; e1 e3 = e5; e1 e4 = e6; e2 e1 = e3; e2 e2 = e5; e2 e3 = e6; e3 e1 = e4; e3 e2 = e6; e4 e1 = e5; e5 e1 = e6",
        provenance: Some(ProvenanceData {
            parent: "B5_05",
            parent_bindings: &[],
            cocycles: &["N(2)"],
        }),
    },
    EntryData {
        name: "B6_20",
        params: &[],
        nonzero: &[],
        table: "e1 e1 = e2; e1 e2 = e5; e1 e3 = e6; e2 e1 = e3; e2 e2 = e6; e3 e1 = e4; e4 e1 = e5; e5 e1 = e6",
        provenance: Some(ProvenanceData {
            parent: "B5_06",
            parent_bindings: &[],
            cocycles: &["N(2)"],
        }),
    },
    EntryData {
        name: "B6_21",
        params: &[],
        nonzero: &[],
        table: "e1 e1 = e2; e1 e2 = e6; e2 e1 = e3; e3 e1 = e4; e4 e1 = e5; e5 e1 = e6",
        provenance: Some(ProvenanceData {
            parent: "B5_07",
            parent_bindings: &[],
            cocycles: &["N(1) + N(2)"],
        }),
    },
    EntryData {
        name: "B6_22",
        params: &[],
        nonzero: &[],
        table: "e1 e1 = e2; e2 e1 = e3; e3 e1 = e4; e4 e1 = e5; e5 e1 = e6",
        provenance: Some(ProvenanceData {
            parent: "B5_07",
            parent_bindings: &[],
            cocycles: &["N(2)"],
        }),
    },
    EntryData {
        name: "B6_23",
        params: &[],
        nonzero: &[],
        table: "e1 e1 = e2; e1 e2 = e3; e1 e3 = e4; e1 e4 = e5; e1 e5 = e6; e2 e1 = e4; e2 e2 = e5; e2 e3 = e6; e3 e1 = e5; e3 e2 = e6; e4 e1 = e6",
        provenance: Some(ProvenanceData {
            parent: "B5_08",
            parent_bindings: &[],
            cocycles: &["N(2)"],
        }),
    },
    EntryData {
        name: "B6_24",
        params: &[],
        nonzero: &[],
        table: "e1 e1 = e2; e1 e2 = e3; e1 e3 = e4; e1 e4 = e5; e1 e5 = e6; e2 e1 = e3 + e4; e2 e2 = e4 + e5; e2 e3 = e5 + e6; e2 e4 = e6; e3 e1 = e4 + e5; e3 e2 = e5 + e6; e3 e3 = e6; e4 e1 = e5 + e6; e4 e2 = e6; e5 e1 = e6",
        provenance: Some(ProvenanceData {
            parent: "B5_09",
            parent_bindings: &[],
            cocycles: &["N(2)"],
        }),
    },
    EntryData {
        name: "B6_25",
        params: &["lambda"],
        nonzero: &[],
        table: "e1 e1 = e2; e1 e2 = e3; e1 e3 = e4; e1 e4 = e5; e1 e5 = e6; e2 e1 = lambda e3; e2 e2 = lambda e4; e2 e3 = lambda e5; e2 e4 = lambda e6; e3 e1 = lambda e4; e3 e2 = lambda e5; e3 e3 = lambda e6; e4 e1 = lambda e5; e4 e2 = lambda e6; e5 e1 = lambda e6",
        provenance: Some(ProvenanceData {
            parent: "B5_10",
            parent_bindings: &[("lambda", "lambda")],
            cocycles: &["N(2)"],
        }),
    },
    EntryData {
        name: "B6_26",
        params: &[],
        nonzero: &[],
        table: "e1 e1 = e2; e1 e2 = e3; e1 e3 = e4; e1 e4 = e5; e1 e5 = e6; e2 e1 = e6",
        provenance: Some(ProvenanceData {
            parent: "B5_10",
            parent_bindings: &[("lambda", "0")],
            cocycles: &["N(1) + N(2)"],
        }),
    },
    EntryData {
        name: "B6_27",
        params: &[],
        nonzero: &[],
        table: "e1 e1 = e2; e1 e2 = e3; e1 e3 = e4; e1 e4 = e5; e1 e5 = e6; e2 e1 = e3 + e6; e2 e2 = e4; e2 e3 = e5; e2 e4 = e6; e3 e1 = e4; e3 e2 = e5; e3 e3 = e6; e4 e1 = e5; e4 e2 = e6; e5 e1 = e6",
        provenance: Some(ProvenanceData {
            parent: "B5_10",
            parent_bindings: &[("lambda", "1")],
            cocycles: &["N(1) + N(2)"],
        }),
    },
    EntryData {
        name: "B6_28",
        params: &[],
        nonzero: &[],
        table: "e1 e1 = e2; e1 e2 = e3; e1 e3 = e4; e1 e4 = e5; e1 e5 = e6; e2 e1 = e5; e2 e2 = e6; e3 e1 = e6",
        provenance: Some(ProvenanceData {
            parent: "B5_11",
            parent_bindings: &[],
            cocycles: &["N(2)"],
        }),
    },
    EntryData {
        name: "B6_29",
        params: &[],
        nonzero: &[],
        table: "e1 e1 = e2; e1 e2 = e3; e1 e3 = e4; e1 e4 = e5; e1 e5 = e6; e2 e1 = e3 + e5; e2 e2 = e4 + e6; e2 e3 = e5; e2 e4 = e6; e3 e1 = e4 + e6; e3 e2 = e5; e3 e3 = e6; e4 e1 = e5; e4 e2 = e6; e5 e1 = e6",
        provenance: Some(ProvenanceData {
            parent: "B5_12",
            parent_bindings: &[],
            cocycles: &["N(2)"],
        }),
    },
];

pub const COHOMOLOGY: &[CohomologyData] = &[
    CohomologyData {
        algebra: "B4_01",
        params: &[],
        bindings: &[],
        nonzero: &[],
        z2: &["D(1,1)", "D(1,2)", "D(1,3) + D(2,2) + D(4,1)", "D(1,4)", "D(2,1)", "D(3,1)"],
        b2: &["D(1,1)", "D(1,2)", "D(2,1)"],
        h2: &["D(1,4)", "D(1,3) + D(2,2) + D(4,1)", "D(3,1)"],
    },
    CohomologyData {
        algebra: "B4_02",
        params: &[],
        bindings: &[],
        nonzero: &[],
        z2: &["D(1,1)", "D(1,2)", "D(1,3) + D(2,2) + D(4,1)", "D(2,1)", "D(3,1)"],
        b2: &["D(1,1)", "D(1,2) + D(3,1)", "D(2,1)"],
        h2: &["D(1,3) + D(2,2) + D(4,1)", "D(3,1)"],
    },
    CohomologyData {
        algebra: "B4_03",
        params: &[],
        bindings: &[],
        nonzero: &[],
        z2: &["D(1,1)", "D(1,2)", "D(2,1)", "D(3,1)", "D(4,1)"],
        b2: &["D(1,1)", "D(2,1)", "D(3,1)"],
        h2: &["D(1,2)", "D(4,1)"],
    },
    CohomologyData {
        algebra: "B4_04",
        params: &[],
        bindings: &[],
        nonzero: &[],
        z2: &["D(1,1)", "D(1,2)", "D(1,3)", "D(1,4) + D(2,2) + D(3,1)", "D(2,1)"],
        b2: &["D(1,1)", "D(1,2)", "D(1,3) + D(2,1)"],
        h2: &["D(1,4) + D(2,2) + D(3,1)", "D(2,1)"],
    },
    CohomologyData {
        algebra: "B4_05",
        params: &[],
        bindings: &[],
        nonzero: &[],
        z2: &[
            "D(1,1)",
            "D(1,2)",
            "D(1,3) + D(2,2) + D(3,1)",
            "D(1,4) + D(2,2) + D(2,3) + D(3,1) + D(3,2) + D(4,1)",
            "D(2,1)",
        ],
        b2: &["D(1,1)", "D(1,2) + D(2,1)", "D(1,3) + D(2,1) + D(2,2) + D(3,1)"],
        h2: &["D(1,4) + D(2,2) + D(2,3) + D(3,1) + D(3,2) + D(4,1)", "D(2,1)"],
    },
    CohomologyData {
        algebra: "B4_06",
        params: &["lambda"],
        bindings: &[("lambda", "lambda")],
        nonzero: &[],
        z2: &[
            "D(1,1)",
            "D(1,2)",
            "D(1,3) + lambda*D(2,2) + lambda*D(3,1)",
            "D(1,4) + lambda*D(2,3) + lambda*D(3,2) + lambda*D(4,1)",
            "D(2,1)",
        ],
        b2: &["D(1,1)", "D(1,2) + lambda*D(2,1)", "D(1,3) + lambda*D(2,2) + lambda*D(3,1)"],
        h2: &["D(1,4) + lambda*D(2,3) + lambda*D(3,2) + lambda*D(4,1)", "D(2,1)"],
    },
    CohomologyData {
        algebra: "B5_01",
        params: &[],
        bindings: &[],
        nonzero: &[],
        z2: &["D(1,1)", "D(1,2)", "D(1,3) + D(2,2) + D(4,1)", "D(1,4)", "D(2,1)", "D(3,1)", "D(5,1)"],
        b2: &["D(1,1)", "D(1,2)", "D(2,1)", "D(3,1)"],
        h2: &["D(1,3) + D(2,2) + D(4,1)", "D(1,4)", "D(5,1)"],
    },
    CohomologyData {
        algebra: "B5_02",
        params: &["lambda"],
        bindings: &[("lambda", "lambda")],
        nonzero: &[],
        z2: &[
            "D(1,1)",
            "D(1,2)",
            "D(1,3) - lambda*D(1,4)",
            "D(1,4) + D(2,2) + D(3,1)",
            "D(1,5) + lambda*D(2,3) + lambda*D(3,2) + lambda*D(5,1)",
            "D(2,1)",
            "D(4,1)",
        ],
        b2: &["D(1,1)", "D(1,2)", "D(1,3) + lambda*D(2,2) + lambda*D(3,1)", "D(2,1)"],
        h2: &["D(1,4) + D(2,2) + D(3,1)", "D(1,5) + lambda*D(2,3) + lambda*D(3,2) + lambda*D(5,1)", "D(4,1)"],
    },
    CohomologyData {
        algebra: "B5_03",
        params: &["lambda", "mu"],
        bindings: &[("lambda", "lambda"), ("mu", "mu")],
        nonzero: &["1 - lambda*mu"],
        z2: &["D(1,1)", "D(1,2)", "D(1,3) + D(2,2) + D(4,1)", "D(1,4)", "D(2,1)", "D(3,1)"],
        b2: &["D(1,1)", "D(1,2)", "D(1,3) + lambda*D(1,4) + D(2,2) + mu*D(3,1) + D(4,1)", "D(2,1)"],
        h2: &["D(1,4)", "D(3,1)"],
    },
    CohomologyData {
        algebra: "B5_03",
        params: &["lambda"],
        bindings: &[("lambda", "lambda"), ("mu", "1/lambda")],
        nonzero: &["lambda"],
        z2: &[
            "D(1,1)",
            "D(1,2)",
            "D(1,3) + D(2,2) + D(4,1)",
            "D(1,4)",
            "lambda*D(1,5) + D(2,3) + lambda*D(2,4) + D(3,2) + lambda*D(4,2) + D(5,1)",
            "D(2,1)",
            "D(3,1)",
        ],
        b2: &["D(1,1)", "D(1,2)", "D(1,3) + lambda*D(1,4) + D(2,2) + (1/lambda)*D(3,1) + D(4,1)", "D(2,1)"],
        h2: &["D(1,4)", "lambda*D(1,5) + D(2,3) + lambda*D(2,4) + D(3,2) + lambda*D(4,2) + D(5,1)", "D(3,1)"],
    },
    CohomologyData {
        algebra: "B5_04",
        params: &["lambda"],
        bindings: &[("lambda", "lambda")],
        nonzero: &[],
        z2: &["D(1,1)", "D(1,2)", "D(1,3) + D(2,2) + D(4,1)", "D(1,4)", "D(2,1)", "D(3,1)"],
        b2: &["D(1,1)", "D(1,2)", "D(1,4) + lambda*D(3,1)", "D(2,1)"],
        h2: &["D(1,3) + D(2,2) + D(4,1)", "D(3,1)"],
    },
    CohomologyData {
        algebra: "B5_05",
        params: &[],
        bindings: &[],
        nonzero: &[],
        z2: &["D(1,1)", "D(1,2)", "D(1,3) + D(2,2) + D(4,1)", "D(1,4) + D(2,3) + D(3,2) + D(5,1)", "D(2,1)", "D(3,1)"],
        b2: &["D(1,1)", "D(1,2) + D(3,1)", "D(1,3) + D(2,2) + D(4,1)", "D(2,1)"],
        h2: &["D(1,4) + D(2,3) + D(3,2) + D(5,1)", "D(3,1)"],
    },
    CohomologyData {
        algebra: "B5_06",
        params: &[],
        bindings: &[],
        nonzero: &[],
        z2: &["D(1,1)", "D(1,2)", "D(1,3) + D(2,2) + D(5,1)", "D(2,1)", "D(3,1)", "D(4,1)"],
        b2: &["D(1,1)", "D(1,2) + D(4,1)", "D(2,1)", "D(3,1)"],
        h2: &["D(1,3) + D(2,2) + D(5,1)", "D(4,1)"],
    },
    CohomologyData {
        algebra: "B5_07",
        params: &[],
        bindings: &[],
        nonzero: &[],
        z2: &["D(1,1)", "D(1,2)", "D(2,1)", "D(3,1)", "D(4,1)", "D(5,1)"],
        b2: &["D(1,1)", "D(2,1)", "D(3,1)", "D(4,1)"],
        h2: &["D(1,2)", "D(5,1)"],
    },
    CohomologyData {
        algebra: "B5_08",
        params: &[],
        bindings: &[],
        nonzero: &[],
        z2: &["D(1,1)", "D(1,2)", "D(1,3)", "D(1,4) + D(2,2) + D(3,1)", "D(1,5) + D(2,3) + D(3,2) + D(4,1)", "D(2,1)"],
        b2: &["D(1,1)", "D(1,2)", "D(1,3) + D(2,1)", "D(1,4) + D(2,2) + D(3,1)"],
        h2: &["D(1,5) + D(2,3) + D(3,2) + D(4,1)", "D(2,1)"],
    },
    CohomologyData {
        algebra: "B5_09",
        params: &[],
        bindings: &[],
        nonzero: &[],
        z2: &[
            "D(1,1)",
            "D(1,2)",
            "D(1,3) + D(2,2) + D(3,1)",
            "D(1,4) + D(2,2) + D(2,3) + D(3,1) + D(3,2) + D(4,1)",
            "D(1,5) + D(2,3) + D(2,4) + D(3,2) + D(3,3) + D(4,1) + D(4,2) + D(5,1)",
            "D(2,1)",
        ],
        b2: &[
            "D(1,1)",
            "D(1,2) + D(2,1)",
            "D(1,3) + D(2,1) + D(2,2) + D(3,1)",
            "D(1,4) + D(2,2) + D(2,3) + D(3,1) + D(3,2) + D(4,1)",
        ],
        h2: &["D(1,5) + D(2,3) + D(2,4) + D(3,2) + D(3,3) + D(4,1) + D(4,2) + D(5,1)", "D(2,1)"],
    },
    CohomologyData {
        algebra: "B5_10",
        params: &["lambda"],
        bindings: &[("lambda", "lambda")],
        nonzero: &[],
        z2: &[
            "D(1,1)",
            "D(1,2)",
            "D(1,3) + lambda*D(2,2) + lambda*D(3,1)",
            "D(1,4) + lambda*D(2,3) + lambda*D(3,2) + lambda*D(4,1)",
            "D(1,5) + lambda*D(2,4) + lambda*D(3,3) + lambda*D(4,2) + lambda*D(5,1)",
            "D(2,1)",
        ],
        b2: &[
            "D(1,1)",
            "D(1,2) + lambda*D(2,1)",
            "D(1,3) + lambda*D(2,2) + lambda*D(3,1)",
            "D(1,4) + lambda*D(2,3) + lambda*D(3,2) + lambda*D(4,1)",
        ],
        h2: &["D(1,5) + lambda*D(2,4) + lambda*D(3,3) + lambda*D(4,2) + lambda*D(5,1)", "D(2,1)"],
    },
    CohomologyData {
        algebra: "B5_11",
        params: &[],
        bindings: &[],
        nonzero: &[],
        z2: &["D(1,1)", "D(1,2)", "D(1,3)", "D(1,4)", "D(1,5) + D(2,2) + D(3,1)", "D(2,1)"],
        b2: &["D(1,1)", "D(1,2)", "D(1,3)", "D(1,4) + D(2,1)"],
        h2: &["D(1,5) + D(2,2) + D(3,1)", "D(2,1)"],
    },
    CohomologyData {
        algebra: "B5_12",
        params: &[],
        bindings: &[],
        nonzero: &[],
        z2: &[
            "D(1,1)",
            "D(1,2)",
            "D(1,3) + D(2,2) + D(3,1)",
            "D(1,4) + D(2,3) + D(3,2) + D(4,1)",
            "D(1,5) + D(2,2) + D(2,4) + D(3,1) + D(3,3) + D(4,2) + D(5,1)",
            "D(2,1)",
        ],
        b2: &["D(1,1)", "D(1,2) + D(2,1)", "D(1,3) + D(2,2) + D(3,1)", "D(1,4) + D(2,1) + D(2,3) + D(3,2) + D(4,1)"],
        h2: &["D(1,5) + D(2,2) + D(2,4) + D(3,1) + D(3,3) + D(4,2) + D(5,1)", "D(2,1)"],
    },
];

const UNI4: &str = "1, 0, 0, 0; x, 1, 0, 0; y, x, 1, 0; z, x + y, x, 1";
const UNI5_A: &str = "1, 0, 0, 0, 0; 0, 1, 0, 0, 0; x, 0, 1, 0, 0; y, x, 0, 1, 0; z, x + y, x, 0, 1";
const UNI5_B: &str = "1, 0, 0, 0, 0; x, 1, 0, 0, 0; y, x, 1, 0, 0; z, y, x, 1, 0; t, x + z, y, x, 1";

pub const FAMILIES: &[FamilyData] = &[
    FamilyData {
        algebra: "B4_01",
        params: &[],
        bindings: &[],
        nonzero: &[],
        nablas: &["D(1,4)", "D(3,1)", "D(1,3) + D(4,1) + D(2,2)"],
        vars: &["x", "y", "z", "t"],
        pattern: "x, 0, 0, 0; y, x^2, 0, 0; z, x*y, x^3, 0; t, x*y, 0, x^3",
        alpha: &["x^4*a1", "x^4*a2", "x^4*a3"],
    },
    FamilyData {
        algebra: "B4_02",
        params: &[],
        bindings: &[],
        nonzero: &[],
        nablas: &["D(3,1)", "D(1,3) + D(2,2) + D(4,1)"],
        vars: &["x", "y", "z"],
        pattern: UNI4,
        alpha: &["a1 - x*a2", "a2"],
    },
    FamilyData {
        algebra: "B4_03",
        params: &[],
        bindings: &[],
        nonzero: &[],
        nablas: &["D(1,2)", "D(4,1)"],
        vars: &["x", "y", "z", "t"],
        pattern: "x, 0, 0, 0; y, x^2, 0, 0; z, x*y, x^3, 0; t, x*z, x^2*y, x^4",
        alpha: &["x^3*a1", "x^5*a2"],
    },
    FamilyData {
        algebra: "B4_04",
        params: &[],
        bindings: &[],
        nonzero: &[],
        nablas: &["D(2,1)", "D(1,4) + D(2,2) + D(3,1)"],
        vars: &["x", "y", "z"],
        pattern: UNI4,
        alpha: &["a1 + x*a2", "a2"],
    },
    FamilyData {
        algebra: "B4_05",
        params: &[],
        bindings: &[],
        nonzero: &[],
        nablas: &["D(2,1)", "D(1,4) + D(2,2) + D(2,3) + D(3,1) + D(3,2) + D(4,1)"],
        vars: &["x", "y", "z"],
        pattern: "1, 0, 0, 0; x, 1, 0, 0; y, 2*x, 1, 0; z, x^2 + x + 2*y, 3*x, 1",
        alpha: &["a1 - 2*x*a2", "a2"],
    },
    FamilyData {
        algebra: "B4_06",
        params: &["lambda"],
        bindings: &[("lambda", "lambda")],
        nonzero: &[],
        nablas: &["D(2,1)", "D(1,4) + lambda*D(2,3) + lambda*D(3,2) + lambda*D(4,1)"],
        vars: &["x", "y", "z"],
        pattern: "x, 0, 0, 0; 0, x^2, 0, 0; y, 0, x^3, 0; z, (1 + lambda)*x*y, 0, x^4",
        alpha: &["x^3*a1 + (1 - lambda)*lambda*x^2*y*a2", "x^5*a2"],
    },
    FamilyData {
        algebra: "B5_01",
        params: &[],
        bindings: &[],
        nonzero: &[],
        nablas: &["D(1,4)", "D(5,1)", "D(1,3) + D(2,2) + D(4,1)"],
        vars: &["x", "y", "z", "t", "s"],
        pattern: "x, 0, 0, 0, 0; y, x^2, 0, 0, 0; z, x*y, x^3, 0, 0; t, x*y, 0, x^3, 0; s, x*z, x^2*y, 0, x^4",
        alpha: &["x^4*a1", "x^5*a2", "x^4*a3"],
    },
    FamilyData {
        algebra: "B5_02",
        params: &["lambda"],
        bindings: &[("lambda", "lambda")],
        nonzero: &[],
        nablas: &["D(4,1)", "D(1,4) + D(2,2) + D(3,1)", "D(1,5) + lambda*D(2,3) + lambda*D(3,2) + lambda*D(5,1)"],
        vars: &["x", "y", "z", "t", "s"],
        pattern: "x, 0, 0, 0, 0; y, x^2, 0, 0, 0; z, (1 + lambda)*x*y, x^3, 0, 0; t, x*y, 0, x^3, 0; \
                  s, lambda*y^2 + (1 + lambda)*x*z, (1 + 2*lambda)*x^2*y, lambda*(1 - lambda)*x^2*y, x^4",
        alpha: &["x^4*a1 + (1 - lambda)*lambda^2*x^3*y*a3", "x^4*a2 + (1 - lambda)*lambda*x^3*y*a3", "x^5*a3"],
    },
    FamilyData {
        algebra: "B5_03",
        params: &["lambda"],
        bindings: &[("lambda", "lambda"), ("mu", "1/lambda")],
        nonzero: &["lambda"],
        nablas: &["D(1,4)", "D(3,1)", "lambda*D(1,5) + D(2,3) + lambda*D(2,4) + D(3,2) + lambda*D(4,2) + D(5,1)"],
        vars: &["x", "y", "z", "t", "s"],
        pattern: "x, 0, 0, 0, 0; y, x^2, 0, 0, 0; z, x*y, x^3, 0, 0; t, x*y, 0, x^3, 0; \
                  s, (1 + 1/lambda)*x*z + (1 + lambda)*x*t + y^2, (2 + 1/lambda)*x^2*y, (2 + lambda)*x^2*y, x^4",
        alpha: &["x^4*a1 + (1 - lambda)*lambda*x^3*y*a3", "x^4*a2 + (1 - 1/lambda)*x^3*y*a3", "x^5*a3"],
    },
    FamilyData {
        algebra: "B5_05",
        params: &[],
        bindings: &[],
        nonzero: &[],
        nablas: &["D(3,1)", "D(1,4) + D(2,3) + D(3,2) + D(5,1)"],
        vars: &["x", "y", "z"],
        pattern: UNI5_A,
        alpha: &["a1 - x*a2", "a2"],
    },
    FamilyData {
        algebra: "B5_06",
        params: &[],
        bindings: &[],
        nonzero: &[],
        nablas: &["D(4,1)", "D(1,3) + D(2,2) + D(5,1)"],
        vars: &["x", "y", "z", "t"],
        pattern: UNI5_B,
        alpha: &["a1 - x*a2", "a2"],
    },
    FamilyData {
        algebra: "B5_07",
        params: &[],
        bindings: &[],
        nonzero: &[],
        nablas: &["D(1,2)", "D(5,1)"],
        vars: &["x", "y", "z", "t", "s"],
        pattern: "x, 0, 0, 0, 0; y, x^2, 0, 0, 0; z, x*y, x^3, 0, 0; t, x*z, x^2*y, x^4, 0; s, x*t, x^2*z, x^3*y, x^5",
        alpha: &["x^3*a1", "x^6*a2"],
    },
    FamilyData {
        algebra: "B5_08",
        params: &[],
        bindings: &[],
        nonzero: &[],
        nablas: &["D(2,1)", "D(1,5) + D(2,3) + D(3,2) + D(4,1)"],
        vars: &["x", "y", "z"],
        pattern: UNI5_A,
        alpha: &["a1 + x*a2", "a2"],
    },
    FamilyData {
        algebra: "B5_09",
        params: &[],
        bindings: &[],
        nonzero: &[],
        nablas: &["D(2,1)", "D(1,5) + D(2,3) + D(2,4) + D(3,2) + D(3,3) + D(4,1) + D(4,2) + D(5,1)"],
        vars: &["x", "y", "z"],
        pattern: "1, 0, 0, 0, 0; 0, 1, 0, 0, 0; x, 0, 1, 0, 0; y, 2*x, 0, 1, 0; z, x + 2*y, 3*x, 0, 1",
        alpha: &["a1 - 2*x*a2", "a2"],
    },
    FamilyData {
        algebra: "B5_10",
        params: &["lambda"],
        bindings: &[("lambda", "lambda")],
        nonzero: &[],
        nablas: &["D(2,1)", "D(1,5) + lambda*D(2,4) + lambda*D(3,3) + lambda*D(4,2) + lambda*D(5,1)"],
        vars: &["x", "y", "z"],
        pattern: "x, 0, 0, 0, 0; 0, x^2, 0, 0, 0; 0, 0, x^3, 0, 0; y, 0, 0, x^4, 0; z, (1 + lambda)*x*y, 0, 0, x^5",
        alpha: &["x^3*a1 + (1 - lambda)*lambda*x^2*y*a2", "x^6*a2"],
    },
    FamilyData {
        algebra: "B5_11",
        params: &[],
        bindings: &[],
        nonzero: &[],
        nablas: &["D(2,1)", "D(1,5) + D(2,2) + D(3,1)"],
        vars: &["x", "y", "z", "t"],
        pattern: UNI5_B,
        alpha: &["a1 + x*a2", "a2"],
    },
    FamilyData {
        algebra: "B5_12",
        params: &[],
        bindings: &[],
        nonzero: &[],
        nablas: &["D(2,1)", "D(1,5) + D(2,2) + D(2,4) + D(3,1) + D(3,3) + D(4,2) + D(5,1)"],
        vars: &["x", "y", "z", "t"],
        pattern: "1, 0, 0, 0, 0; x, 1, 0, 0, 0; y, 2*x, 1, 0, 0; z, x^2 + 2*y, 3*x, 1, 0; \
                  t, x*(1 + 2*y) + 2*z, 3*x^2 + 3*y, 4*x, 1",
        alpha: &["a1 - 3*x*a2", "a2"],
    },
];
