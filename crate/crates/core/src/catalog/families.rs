//! The family table: every deletion family with its case split, as data.
//!
//! A case's `when` string is conjoined with the family's parameter range, so it
//! only spells out the case-specific conditions. Sub-cases of one numbered case
//! are labelled `ii.1`, `ii.2`, ... in the order they are stated. The second
//! block of the h = 3 general triple uses primed labels.

use super::HRegime;

pub(crate) struct CaseSpec {
    pub label: &'static str,
    pub when: &'static str,
    pub unless: &'static str,
    pub formula: &'static str,
    /// The formula exactly as stated, when `formula` is a corrected reading.
    pub stated: Option<&'static str>,
    pub k_min: Option<&'static str>,
}

const fn c(label: &'static str, when: &'static str, formula: &'static str) -> CaseSpec {
    CaseSpec { label, when, unless: "", formula, stated: None, k_min: None }
}

const fn otherwise(label: &'static str, when: &'static str, unless: &'static str, formula: &'static str) -> CaseSpec {
    CaseSpec { label, when, unless, formula, stated: None, k_min: None }
}

const fn from_k(label: &'static str, when: &'static str, formula: &'static str, k_min: &'static str) -> CaseSpec {
    CaseSpec { label, when, unless: "", formula, stated: None, k_min: Some(k_min) }
}

const fn corrected(label: &'static str, when: &'static str, formula: &'static str, stated: &'static str) -> CaseSpec {
    CaseSpec { label, when, unless: "", formula, stated: Some(stated), k_min: None }
}

pub(crate) struct FamilySpec {
    pub id: &'static str,
    pub extension: i64,
    pub deleted: &'static [&'static str],
    pub params: &'static str,
    pub regime: HRegime,
    pub k_min: &'static str,
    pub range: &'static str,
    pub dual: Option<&'static str>,
    pub cases: &'static [CaseSpec],
}

use HRegime::{AtLeast, Exactly};

pub(crate) static FAMILIES: &[FamilySpec] = &[
    FamilySpec {
        id: "one-deletion",
        extension: 0,
        deleted: &["x"],
        params: "x",
        regime: AtLeast(3),
        k_min: "3h+1",
        range: "x in [1, k-1]",
        dual: Some("one-deletion"),
        cases: &[
            c("i", "x in [1, h-1]", "hk-h^2+x+1"),
            c("ii", "x in [k-h+1, k-1]", "(h+1)k-h^2-x+1"),
            c("iii", "x in {h, k-h}", "hk-h^2+h"),
            c("iv", "x in [h+1, k-h-1]", "hk-h^2+h+1"),
        ],
    },
    FamilySpec {
        id: "pair-x-x1",
        extension: 1,
        deleted: &["x", "x+1"],
        params: "x",
        regime: AtLeast(3),
        k_min: "3h+3",
        range: "x in [1, k-1]",
        dual: Some("pair-x-x1"),
        cases: &[
            c("i", "x in [1, h-1]", "hk-h^2+2x+1"),
            c("ii", "x in [k-h+1, k-1]", "(h+2)k-h^2-2x+1"),
            c("iii", "x in {h, k-h}", "hk-h^2+2h-1"),
            c("iv", "x in [h+1, k-h-1]", "hk-h^2+2h+1"),
        ],
    },
    FamilySpec {
        id: "pair-x-x2",
        extension: 1,
        deleted: &["x", "x+2"],
        params: "x",
        regime: AtLeast(3),
        k_min: "3h+3",
        range: "x in [1, k-2]",
        dual: Some("pair-x-x2"),
        cases: &[
            c("i", "x in [1, h-2]", "hk-h^2+2x+2"),
            c("ii", "x in [k-h+1, k-2]", "(h+2)k-h^2-2x"),
            c("iii", "x in {h-1, k-h}", "hk-h^2+2h-1"),
            c("iv", "x in {h, k-h-1}", "hk-h^2+2h"),
            c("v", "x in [h+1, k-h-2]", "hk-h^2+2h+1"),
        ],
    },
    FamilySpec {
        id: "pair-x-k",
        extension: 1,
        deleted: &["x", "k"],
        params: "x",
        regime: AtLeast(3),
        k_min: "3h+3",
        range: "x in [1, k-3]",
        dual: Some("pair-1-y"),
        cases: &[
            c("i", "x in [1, h-1]", "hk-h^2+x+2"),
            c("ii", "x in {h, k-h}", "hk-h^2+h+1"),
            c("iii", "x in [h+1, k-h-1]", "hk-h^2+h+2"),
            c("iv", "x in [k-h+1, k-3]", "(h+1)k-h^2-x+2"),
        ],
    },
    FamilySpec {
        id: "pair-1-y",
        extension: 1,
        deleted: &["1", "y"],
        params: "y",
        regime: AtLeast(3),
        k_min: "3h+3",
        range: "y in [4, k]",
        dual: Some("pair-x-k"),
        cases: &[
            c("i", "y in [k-h+2, k]", "(h+1)k-h^2-y+3"),
            c("ii", "y in {h+1, k-h+1}", "hk-h^2+h+1"),
            c("iii", "y in [h+2, k-h]", "hk-h^2+h+2"),
            corrected("iv", "y in [4, h]", "hk-h^2+y+1", "(h-1)k-h^2+y+1"),
        ],
    },
    FamilySpec {
        id: "pair-x-km1",
        extension: 1,
        deleted: &["x", "k-1"],
        params: "x",
        regime: AtLeast(3),
        k_min: "3h+3",
        range: "x in [1, k-4]",
        dual: Some("pair-2-y"),
        cases: &[
            c("i", "x in [1, h-1]", "hk-h^2+x+3"),
            c("ii", "x in {h, k-h}", "hk-h^2+h+2"),
            c("iii", "x in [h+1, k-h-2]", "hk-h^2+h+3"),
            c("iv.1", "x = k-h-1; h >= 4", "hk-h^2+h+3"),
            c("iv.2", "x = k-h-1; h = 3", "3k-4"),
            c("v", "x in [k-h+1, k-4]", "(h+1)k-h^2-x+3"),
        ],
    },
    FamilySpec {
        id: "pair-2-y",
        extension: 1,
        deleted: &["2", "y"],
        params: "y",
        regime: AtLeast(3),
        k_min: "3h+3",
        range: "y in [5, k]",
        dual: Some("pair-x-km1"),
        cases: &[
            c("i", "y in [k-h+2, k]", "hk-h^2+k-y+4"),
            c("ii", "y in {h+1, k-h+1}", "hk-h^2+h+2"),
            c("iii", "y in [h+3, k-h]", "hk-h^2+h+3"),
            c("iv.1", "y = h+2; h >= 4", "hk-h^2+h+3"),
            c("iv.2", "y = h+2; h = 3", "3k-4"),
            c("v", "y in [5, h]", "hk-h^2+y+2"),
        ],
    },
    FamilySpec {
        id: "general-pair",
        extension: 1,
        deleted: &["x", "y"],
        params: "xy",
        regime: AtLeast(3),
        k_min: "3h+3",
        range: "x in [3, k-2]; y in [3, k-2]; y - x >= 3",
        dual: Some("general-pair"),
        cases: &[
            c("i", "h >= 6; x in [3, h-3]; y in [6, h]", "hk-h^2+x+y"),
            c("ii", "h >= 5; x in [3, h-2]; y = h+1", "hk-h(h-1)+x"),
            c("iii", "h >= 4; x in [3, h-1]; y in [h+2, k-h]", "hk-h(h-1)+x+1"),
            c("iv", "h >= 4; x in [3, h-1]; y = k-h+1", "hk-h(h-1)+x"),
            c("v", "h >= 4; x in [3, h-1]; y in [k-h+2, k-2]", "(h+1)k-h^2+x-y+2"),
            c("vi", "x = h; y in [h+3, k-h] | x in [h+1, k-h-2]; y = k-h+1", "hk-h^2+2h"),
            c("vii", "x = h; y = k-h+1", "hk-h^2+2h-1"),
            c("viii", "h >= 4; x = h; y in [k-h+2, k-2]", "(h+1)k-h(h-1)-y+1"),
            c("ix", "x in [h+1, k-h-3]; y in [h+4, k-h]", "hk-h^2+2h+1"),
            c("x", "h >= 4; x in [h+1, k-h-1]; y in [k-h+2, k-2]", "(h+1)k-h(h-1)-y+2"),
            c("xi", "h >= 5; x = k-h; y in [k-h+3, k-2]", "(h+1)k-h(h-1)-y+1"),
            c("xii", "h >= 6; x in [k-h+1, k-5]; y in [k-h+4, k-2]", "(h+2)k-h^2-x-y+2"),
        ],
    },
    FamilySpec {
        id: "triple-x-x1-x2",
        extension: 2,
        deleted: &["x", "x+1", "x+2"],
        params: "x",
        regime: AtLeast(3),
        k_min: "3h+4",
        range: "x in [1, k-1]",
        dual: Some("triple-x-x1-x2"),
        cases: &[
            c("i", "x in [1, h-1]", "hk-h^2+3x+1"),
            c("ii", "x in [k-h+1, k-1]", "(h+3)k-h^2-3x+1"),
            c("iii", "x in {h, k-h}", "hk-h^2+3h-2"),
            c("iv.1", "x in {h+1, k-h-1}; h = 3", "3k"),
            c("iv.2", "x in {h+1, k-h-1}; h >= 4", "hk-h^2+3h+1"),
            c("v", "x in [h+2, k-h-2]", "hk-h^2+3h+1"),
        ],
    },
    FamilySpec {
        id: "h3-x-x1-z",
        extension: 2,
        deleted: &["x", "x+1", "z"],
        params: "xz",
        regime: Exactly(3),
        k_min: "13",
        range: "x in [2, k-3]; z in [5, k]; z - x >= 3",
        dual: Some("h3-x-y-y1"),
        cases: &[
            c("i", "x = 2; z in {5, 6, 7, k-1, k}", "3k-2"),
            c("ii", "x = 2; z in [8, k-2]", "3k-1"),
            c("iii", "x = 3; z in {k-1, k}", "3k-2"),
            c("iv", "x = 3; z in [6, k-2]", "3k"),
            c("v", "x in [4, k-4]; z = k-1", "3k"),
            c("vi", "x in [4, k-5]; z = k", "3k"),
            c("vii.1", "x = k-4; z = k", "3k-1"),
            c("vii.2", "x = k-3; z = k", "3k-2"),
            c("viii", "x in [4, k-5]; z in [7, k-2]", "3k+1"),
        ],
    },
    FamilySpec {
        id: "h3-x-y-y1",
        extension: 2,
        deleted: &["x", "y", "y+1"],
        params: "xy",
        regime: Exactly(3),
        k_min: "13",
        range: "x in [2, k-3]; y in [4, k-1]; y - x >= 2",
        dual: Some("h3-x-x1-z"),
        cases: &[
            c("i", "x in {2, 3, k-5, k-4, k-3}; y = k-1", "3k-2"),
            c("ii", "x in [4, k-6]; y = k-1", "3k-1"),
            c("iii", "x in {2, 3}; y = k-2", "3k-2"),
            c("iv", "x in [4, k-4]; y = k-2", "3k-1"),
            c("v", "x = 3; y in [5, k-3]", "3k"),
            c("vi", "x = 2; y in [6, k-3]", "3k"),
            c("vii.1", "x = 2; y = 5", "3k-1"),
            c("vii.2", "x = 2; y = 4", "3k-2"),
            c("viii", "x in [4, k-5]; y in [6, k-3]", "3k+1"),
        ],
    },
    FamilySpec {
        id: "h3-general-triple",
        extension: 2,
        deleted: &["x", "y", "z"],
        params: "xyz",
        regime: Exactly(3),
        k_min: "13",
        range: "x >= 2; y - x >= 2; z - y >= 2; z <= k",
        dual: Some("h3-general-triple"),
        cases: &[
            c("i", "x = 2; y = 4; z = 6 | x = 2; y in {4, 5}; z in {k-1, k}", "3k-2"),
            c(
                "ii",
                "x = 2; y in {4, 5}; z in [7, k-2] | x = 2; y in [6, k-3]; z = k-1 \
                 | x = 2; y in [6, k-4]; z = k | x = 3; y in [5, k-3]; z = k-1",
                "3k-1",
            ),
            c("iii", "x >= 4; y <= k-4; z = k | x = 3; y >= 5; z <= k-2", "3k"),
            c("iv", "x >= 4; z <= k-2", "3k+1"),
            from_k("i'", "x = k-4; y = k-2; z = k | x in {2, 3}; y in {k-3, k-2}; z = k", "3k-2", "11"),
            from_k("ii'", "x in [4, k-5]; y in {k-3, k-2}; z = k | x = 3; y in [5, k-4]; z = k", "3k-1", "11"),
            from_k("iii'", "x = 2; y >= 6; z <= k-2 | x >= 4; y <= k-3; z = k-1", "3k", "11"),
        ],
    },
    FamilySpec {
        id: "h3-1-y-z",
        extension: 2,
        deleted: &["1", "y", "z"],
        params: "yz",
        regime: Exactly(3),
        k_min: "13",
        range: "y >= 2; z > y; z <= k+1",
        dual: Some("h3-x-y-k1"),
        cases: &[
            c("i", "y = 2; z = k+1", "3k-5"),
            c("ii", "y = 2; z in {4, 5, k-1, k} | y in {3, 4}; z = k+1", "3k-4"),
            c(
                "iii",
                "y = 3; z in {4, 5, 6, k-1, k} | y = 4; z in {5, k-1, k} | y = k-1; z = k \
                 | y = k-2; z in {k-1, k} | y = k-3; z = k | y = 2; z in [6, k-2] \
                 | y in [5, k-3]; z = k+1",
                "3k-3",
            ),
            c(
                "iv",
                "y = 5; z = 6 | y = 3; z in [7, k-2] | y = 4; z in [6, k-2] \
                 | y in [5, k-3]; z = k-1 | y in [5, k-4]; z = k",
                "3k-2",
            ),
            c("v", "y in [6, k-3]; z = y+1 | y >= 5; z - y >= 2; z <= k-2", "3k-1"),
        ],
    },
    FamilySpec {
        id: "h3-x-y-k1",
        extension: 2,
        deleted: &["x", "y", "k+1"],
        params: "xy",
        regime: Exactly(3),
        k_min: "11",
        range: "x >= 1; y > x; y <= k",
        dual: Some("h3-1-y-z"),
        cases: &[
            c("i", "x = 1; y = k", "3k-5"),
            c("ii", "x in {k-2, k-3, 3, 2}; y = k | x = 1; y in {k-1, k-2}", "3k-4"),
            c(
                "iii",
                "x in {k-2, k-3, k-4, 3, 2}; y = k-1 | x in {k-3, 3, 2}; y = k-2 \
                 | x = 2; y in {3, 4, 5} | x = 3; y = 4 | x in [4, k-4]; y = k \
                 | x = 1; y in [5, k-3]",
                "3k-3",
            ),
            c(
                "iv",
                "x = k-4; y = k-3 | x in [4, k-5]; y = k-1 | x in [4, k-4]; y = k-2 \
                 | x = 3; y in [5, k-3] | x = 2; y in [6, k-3]",
                "3k-2",
            ),
            c("v", "x in [4, k-5]; y = x+1 | x >= 4; y - x >= 2; y <= k-3", "3k-1"),
        ],
    },
    FamilySpec {
        id: "h4-x-x1-k1",
        extension: 2,
        deleted: &["x", "x+1", "k+1"],
        params: "x",
        regime: AtLeast(4),
        k_min: "3h+4",
        range: "x in [1, k-1]",
        dual: Some("h4-1-y-y1"),
        cases: &[
            c("i", "x in [1, h-1]", "hk-h^2+2x+2"),
            c("ii", "x in {h, k-h}", "hk-h^2+2h"),
            c("iii", "x in [h+1, k-h-1]", "hk-h^2+2h+2"),
            c("iv", "x in [k-h+1, k-1]", "(h+2)k-h^2-2x+2"),
        ],
    },
    FamilySpec {
        id: "h4-1-y-y1",
        extension: 2,
        deleted: &["1", "y", "y+1"],
        params: "y",
        regime: AtLeast(4),
        k_min: "3h+2",
        range: "y in [2, k]",
        dual: Some("h4-x-x1-k1"),
        cases: &[
            corrected("i", "y in [k-h+2, k]", "hk-h^2+2(k+2-y)", "hk-h^2+2(k+1-y)"),
            c("ii", "y in {h+1, k-h+1}", "hk-h^2+2h"),
            c("iii", "y in [h+2, k-h]", "hk-h^2+2h+2"),
            c("iv", "y in [2, h]", "hk-h^2+2y"),
        ],
    },
    FamilySpec {
        id: "h4-x-x1-z",
        extension: 2,
        deleted: &["x", "x+1", "z"],
        params: "xz",
        regime: AtLeast(4),
        k_min: "3h+4",
        range: "x >= 2; z - x >= 3; z <= k",
        dual: Some("h4-x-y-y1"),
        cases: &[
            c("i", "x in [2, h-2]; z in [5, h+1]", "hk-h^2+2x+z-1"),
            c("ii.1", "x in [2, h-1]; z = h+2", "hk-h(h-1)+2x"),
            c("ii.2", "x in [2, h-2]; z in [h+3, k-h+1]", "hk-h(h-1)+2x+1"),
            c("ii.3", "x = h-1; z in {h+3, h+4}", "hk-h(h-3)-2"),
            c("ii.4", "x = h-1; z in [h+5, k-h+1]", "hk-h(h-3)-1"),
            c("iii", "x = h; z in [h+3, k-h+1]", "hk-h(h-3)-1"),
            c("iv.1", "x in [2, h-1]; z = k-h+2", "hk-h(h-1)+2x"),
            c("iv.2", "x = h; z = k-h+2", "hk-h(h-3)-2"),
            c("v.1", "x in [2, h-1]; z in [k-h+3, k]", "(h+1)k-h^2+2x-z+3"),
            c("v.2", "x = h; z in [k-h+3, k]", "(h+1)k-h(h-2)-z+1"),
            c("vi.1", "x in [h+1, k-h-1]; z in [h+4, k-h+1]", "hk-h(h-3)+1"),
            c("vi.2", "x in [h+1, k-h-1]; z = k-h+2", "hk-h(h-3)"),
            c("vii.1", "x in [h+1, k-h-1]; z in [k-h+3, k]", "(h+1)k-h(h-2)-z+3"),
            c("vii.2", "x = k-h; z in [k-h+3, k]", "(h+1)k-h(h-2)-z+1"),
            c("viii", "x in [k-h+1, k-3]; z in [k-h+4, k]", "(h+3)k-h^2-(2x+z)+3"),
        ],
    },
    FamilySpec {
        id: "h4-x-y-y1",
        extension: 2,
        deleted: &["x", "y", "y+1"],
        params: "xy",
        regime: AtLeast(4),
        k_min: "3h+4",
        range: "x >= 2; y - x >= 2; y <= k-1",
        dual: Some("h4-x-x1-z"),
        cases: &[
            c("i", "x in [k-h+1, k-3]; y in [k-h+3, k-1]", "(h+3)k-h^2-(x+2y)+3"),
            c("ii.1", "h >= 5; x = k-h; y = k-h+2 | h = 4; x in {k-h-1, k-h}; y = k-h+2", "(h+2)k-h(h-1)-2y+2"),
            otherwise(
                "ii.2",
                "x in [h+1, k-h]; y in [k-h+2, k-1]",
                "h >= 5; x = k-h; y = k-h+2 | h = 4; x in {k-h-1, k-h}; y = k-h+2",
                "(h+2)k-h(h-1)-2y+3",
            ),
            c("iii", "x in [h+1, k-h-1]; y = k-h+1", "hk-h(h-3)-1"),
            c("iv.1", "x = h; y in [k-h+2, k-1]", "(h+2)k-h(h-1)-2y+2"),
            c("iv.2", "x = h; y = k-h+1", "hk-h(h-3)-2"),
            c("v.1", "x in [2, h-1]; y in [k-h+2, k-1]", "(h+2)k-h^2+x-2y+3"),
            c("v.2", "x in [2, h-1]; y = k-h+1", "hk-h(h-2)+x-1"),
            c("vi.1", "x in [h+1, k-h-2]; y in [h+2, k-h]", "hk-h^2+3h+1"),
            c("vi.2", "x = h; y in [h+2, k-h]", "hk-h^2+3h"),
            c("vii.1", "x in [2, h-1]; y in [h+2, k-h]", "hk-h(h-2)+x+1"),
            c("vii.2", "x in [2, h-1]; y = h+1", "hk-h(h-2)+x-1"),
            c("viii", "x in [2, h-2]; y in [4, h]", "hk-h^2+x+2y-1"),
        ],
    },
    FamilySpec {
        id: "h4-general-triple",
        extension: 2,
        deleted: &["x", "y", "z"],
        params: "xyz",
        regime: AtLeast(4),
        k_min: "3h+4",
        range: "x >= 2; y - x >= 2; z - y >= 2; z <= k",
        dual: Some("h4-general-triple"),
        cases: &[
            c("i", "z <= h+1", "hk-h^2+(x+y+z)-2"),
            c("ii", "x >= k-h+1", "(h+3)k-h^2-(x+y+z)+4"),
            c("iii.1", "x in [2, h-2]; y in [4, h+1]; z in [k-h+3, k]", "(h+1)k-h^2+(x+y-z)+2"),
            c("iii.2", "x = h-1; y = h+1; z in [k-h+3, k]", "(h+1)k-h(h-2)-z+1"),
            c("iv.1", "x in [2, h-2]; y in [4, h]; z in [h+2, k-h+1]", "hk-h(h-1)+x+y"),
            c("iv.2", "x in [2, h-2]; y in [4, h]; z = k-h+2", "hk-h(h-1)+x+y-1"),
            c("v", "x in [2, h-1]; y in [k-h+2, k-2]; z in [k-h+4, k]", "(h+2)k-h^2+(x-y-z)+4"),
            c("vi.1", "x in [2, h-1]; y in [h+2, k-h]; z in [k-h+3, k]", "(h+1)k-h(h-1)+(x-z)+3"),
            c("vi.2", "x in [2, h-1]; y in {h+1, k-h+1}; z in [k-h+3, k]", "(h+1)k-h(h-1)+(x-z)+2"),
            c("vii.1", "x in [2, h-1]; y = h+1; z = k-h+2", "hk-h(h-2)+x-1"),
            c("vii.2", "x in [2, h-1]; y in [h+2, k-h]; z = k-h+2", "hk-h(h-2)+x"),
            c("viii.1", "x = h-1; y = h+1; z = h+3", "hk-h(h-3)-2"),
            c("viii.2", "x = h-1; y = h+1; z = k-h+1", "hk-h(h-3)+1"),
            c("viii.3", "x in [2, h-1]; y = h+1; z in [h+4, k-h+1]", "hk-h(h-2)+x"),
            c("viii.4", "x in [2, h-1]; y in [h+2, k-h-2]; z in [h+4, k-h+1]", "hk-h(h-2)+x+1"),
            c("ix.1", "x = h; y in [h+2, k-h]; z in [k-h+3, k]", "(h+1)k-h(h-2)-z+2"),
            c("ix.2", "x = h; y in [h+2, k-h]; z = k-h+2", "hk-h(h-3)-1"),
            c("ix.3", "x = h; y in [h+2, k-h]; z in [h+4, k-h+1]", "hk-h(h-3)"),
            c("x.1", "x = h; y = k-h+1; z = k-h+3", "hk-h(h-3)-2"),
            c("x.2", "x = h; y = k-h+1; z in [k-h+4, k]", "(h+1)k-h(h-2)-z+1"),
            c("x.3", "x = h; y = k-h+2; z = k-h+4", "hk-h(h-3)-3"),
            c("x.4", "x = h; y = k-h+2; z in [k-h+5, k]", "(h+1)k-h(h-2)-z+1"),
            c("x.5", "x = h; y in [k-h+3, k-2]; z in [k-h+5, k]", "(h+2)k-h(h-1)-(y+z)+3"),
            c("xi.1", "x = k-h-1; y = k-h+1; z = k-h+3", "hk-h(h-3)-2"),
            c("xi.2", "x in [h+1, k-h-2]; y = k-h+1; z = k-h+3", "hk-h(h-3)-1"),
            otherwise(
                "xi.3",
                "x >= h+1; y <= k-h+1; z in [k-h+3, k]",
                "x = k-h-1; y = k-h+1; z = k-h+3 | x in [h+1, k-h-2]; y = k-h+1; z = k-h+3",
                "(h+1)k-h(h-2)-z+3",
            ),
            c("xii.1", "x = k-h; y in [k-h+2, k]; z in [k-h+2, k]", "(h+2)k-h(h-1)-(y+z)+3"),
            c("xii.2", "x in [h+1, k-h-1]; y in [k-h+2, k]; z in [k-h+2, k]", "(h+2)k-h(h-1)-(y+z)+4"),
            c("xiii.1", "x >= h+1; z = k-h+2", "hk-h(h-3)"),
            c("xiii.2", "x >= h+1; z <= k-h+1", "hk-h(h-3)+1"),
        ],
    },
    FamilySpec {
        id: "h4-1-y-z",
        extension: 2,
        deleted: &["1", "y", "z"],
        params: "yz",
        regime: AtLeast(4),
        k_min: "3h+4",
        range: "y >= 2; z - y >= 2; z <= k+1",
        dual: Some("h4-x-y-k1"),
        cases: &[
            c("i.1", "y in [2, h-1]; z in [4, h+2]", "hk-h^2-1+(y+z)"),
            c("i.2", "y = h; z = h+2", "hk-h(h-2)"),
            c("ii.1", "y in [2, h]; z in [h+3, k-h+1]", "hk-h(h-1)+y+1"),
            c("ii.2", "y in [2, h]; z = k-h+2", "hk-h(h-1)+y"),
            c("ii.3", "y in [2, h]; z in [k-h+3, k+1]", "hk-h^2+k+3+(y-z)"),
            c("iii.1", "y = h+1; z in [k-h+3, k+1]", "(h+1)k-h(h-1)-z+3"),
            c("iii.2", "y = h+1; z = k-h+2", "hk-h(h-2)"),
            c("iv", "y = k-h; z = k-h+2", "hk-h(h-2)+1"),
            c("v.1", "y in [h+2, k-h]; z in [k-h+3, k+1]", "(h+1)k-h(h-1)-z+4"),
            c("v.2", "y = k-h+1; z in [k-h+3, k+1]", "(h+1)k-h(h-1)-z+3"),
            c("vi", "y in [k-h+2, k-1]; z in [k-h+4, k+1]", "(h+2)k-h^2-(y+z)+5"),
            c("vii.1", "y = h+1; z in [h+3, k-h+1]", "hk-h^2+2h+1"),
            c("vii.2", "y in [h+2, k-h-1]; z in [h+3, k-h+1]", "hk-h^2+2h+2"),
        ],
    },
    FamilySpec {
        id: "h4-x-y-k1",
        extension: 2,
        deleted: &["x", "y", "k+1"],
        params: "xy",
        regime: AtLeast(4),
        k_min: "3h+2",
        range: "x >= 2; y - x >= 2; y <= k",
        dual: Some("h4-1-y-z"),
        cases: &[
            c("i.1", "x in [k-h, k-2]; y in [k-h+3, k]", "(h+2)k-h^2-(x+y)+3"),
            c("i.2", "x = k-h; y = k-h+2", "hk-h(h-2)"),
            c("ii.1", "x in [h+1, k-h-1]; y in [k-h+2, k]", "(h+1)k-h(h-1)-y+3"),
            c("ii.2", "x = h; y in [k-h+2, k]", "(h+1)k-h(h-1)-y+2"),
            c("ii.3", "x in [1, h-1]; y in [k-h+2, k]", "(h+1)k-h^2+(x-y)+3"),
            c("iii.1", "x in [1, h-1]; y = k-h+1", "hk-h(h-1)+x+1"),
            c("iii.2", "x = h; y = k-h+1", "hk-h(h-2)"),
            c("iv", "x = h; y = h+2", "hk-h(h-2)+1"),
            c("v.1", "x in [1, h-1]; y in [h+2, k-h]", "hk-h(h-1)+x+2"),
            c("v.2", "x in [1, h-1]; y = h+1", "hk-h(h-1)+x+1"),
            c("vi", "x in [1, h-2]; y in [3, h]", "hk-h^2+(x+y)+1"),
            c("vii.1", "x in [h+1, k-h-1]; y = k-h+1", "hk-h^2+2h+1"),
            c("vii.2", "x in [h+1, k-h-1]; y in [h+3, k-h]", "hk-h^2+2h+2"),
        ],
    },
];
