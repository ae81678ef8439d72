//! Built-in surfaces with known F-blowup behaviour, and the checks each one's
//! `e = 1` dossier must pass.

use fblow_core::modpres::{signature, PresentedModule};
use fblow_core::{Budget, Config};

use crate::dossier::{signature_doc, Dossier};
use crate::error::CliError;
use crate::spec::{build_matrix, RingSpec};

/// A presentation matrix stored with an entry, row-major.
#[derive(Clone, Debug)]
pub struct Companion {
    pub name: &'static str,
    pub rows: Vec<Vec<&'static str>>,
}

impl Companion {
    fn new(name: &'static str, rows: &[&[&'static str]]) -> Self {
        Self {
            name,
            rows: rows.iter().map(|r| r.to_vec()).collect(),
        }
    }

    /// Row-major transpose, under a new name.
    fn transposed(&self, name: &'static str) -> Self {
        let cols = self.rows.first().map_or(0, |r| r.len());
        Self {
            name,
            rows: (0..cols).map(|j| self.rows.iter().map(|r| r[j]).collect()).collect(),
        }
    }

    pub fn matrix(&self) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|s| s.to_string()).collect())
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Charts {
    Unspecified,
    AllSmooth,
    SomeSingular,
}

/// What the `e = 1` dossier of an entry must show, beyond the checks shared
/// by all entries (rank `p^2`, Kunz law).
#[derive(Clone, Debug)]
pub struct Expect {
    /// Number of isomorphism classes of non-free blocks.
    pub nonfree_classes: Option<usize>,
    /// Sorted ranks of the non-free blocks.
    pub nonfree_ranks: Option<Vec<usize>>,
    /// Every non-free block has the signature of one of these companions, and
    /// every one of them occurs.
    pub companions_cover: Vec<&'static str>,
    /// Number of blocks in the decomposition, free ones included.
    pub blocks: Option<usize>,
    pub charts: Charts,
    /// Every chart is regular in codimension one.
    pub all_r1: bool,
}

#[derive(Clone, Debug)]
pub struct Entry {
    pub id: String,
    pub title: String,
    pub spec: RingSpec,
    /// Id of an entry with the same ring.
    pub duplicate_of: Option<&'static str>,
    pub companions: Vec<Companion>,
    pub expect: Expect,
}

fn surface(id: &str, title: &str, p: u32, relation: &str) -> Entry {
    Entry {
        id: id.to_string(),
        title: title.to_string(),
        spec: RingSpec::new(p, &["x", "y", "z"], &[relation]).named(id),
        duplicate_of: None,
        companions: Vec::new(),
        expect: Expect {
            nonfree_classes: None,
            nonfree_ranks: None,
            companions_cover: Vec::new(),
            blocks: None,
            charts: Charts::Unspecified,
            all_r1: false,
        },
    }
}

/// `D_{2n}^0` in characteristic 2: `z^2 + x^2 y + x y^n`.
pub fn d2n0(n: u32) -> Entry {
    let rel = format!("z^2+x^2*y+x*y^{n}");
    let mut e = surface(&format!("d{}-0", 2 * n), &format!("D{}^0, p = 2", 2 * n), 2, &rel);
    e.expect.nonfree_classes = Some(1);
    e.expect.charts = Charts::SomeSingular;
    e
}

fn d41() -> Entry {
    let mut e = surface("d4-1", "D4^1, p = 2", 2, "z^2+x^2*y+x*y^2+x*y*z");
    e.companions = vec![
        Companion::new("B1", &[&["z", "x+y+z"], &["x*y", "z"]]),
        Companion::new("B2", &[&["z", "y"], &["x*(x+y+z)", "z"]]),
        Companion::new("B3", &[&["z", "y*(x+y+z)"], &["x", "z"]]),
    ];
    e.expect = Expect {
        nonfree_classes: Some(3),
        nonfree_ranks: Some(vec![1, 1, 1]),
        companions_cover: vec!["B1", "B2", "B3"],
        blocks: Some(4),
        charts: Charts::SomeSingular,
        all_r1: false,
    };
    e
}

fn e60() -> Entry {
    let mut e = surface("e6-0", "E6^0, p = 2", 2, "z^2+x^3+y^2*z");
    let a2 = Companion::new(
        "A2",
        &[
            &["x", "y^2+z", "y", "0"],
            &["z", "x^2", "0", "x*y"],
            &["0", "0", "x", "y^2+z"],
            &["0", "0", "z", "x^2"],
        ],
    );
    let a3 = a2.transposed("A3");
    e.companions = vec![
        Companion::new(
            "A1",
            &[
                &["z", "y", "x", "0"],
                &["y*z", "z", "0", "x"],
                &["x^2", "0", "z", "y"],
                &["0", "x^2", "y*z", "z"],
            ],
        ),
        a2,
        a3,
    ];
    e.expect = Expect {
        nonfree_classes: Some(1),
        nonfree_ranks: Some(vec![2, 2]),
        companions_cover: vec!["A1"],
        blocks: Some(2),
        charts: Charts::SomeSingular,
        all_r1: false,
    };
    e
}

/// Same ring as `d4-1`, listed under its other name with its own companion.
fn e61() -> Entry {
    let mut e = d41();
    e.id = "e6-1".into();
    e.title = "E6^1, p = 2".into();
    e.spec.name = Some("e6-1".into());
    e.duplicate_of = Some("d4-1");
    e.companions = vec![Companion::new(
        "A",
        &[
            &["z", "0", "0", "0", "x", "z"],
            &["0", "z", "y", "0", "y", "x"],
            &["x*y", "y*z", "z", "x^2+y*z", "0", "0"],
            &["0", "0", "x", "x", "y", "0"],
            &["x^2", "x*z", "0", "y*z", "z", "0"],
            &["x*y+y^2", "x^2", "0", "x*y", "0", "z"],
        ],
    )];
    e.expect.companions_cover = Vec::new();
    e
}

fn e83() -> Entry {
    let mut e = surface("e8-3", "E8^3, p = 2", 2, "z^2+x^3+y^5+y^3*z");
    e.expect.nonfree_classes = Some(2);
    e.expect.nonfree_ranks = Some(vec![2, 2]);
    e.expect.blocks = Some(2);
    e.expect.charts = Charts::SomeSingular;
    e
}

/// The catalog, in listing order.
pub fn entries() -> Vec<Entry> {
    let mut out = vec![d2n0(2), d2n0(3), d41(), e60(), e61(), e83()];

    let mut e = surface("e8t-fp", "simple elliptic E8~, F-pure, p = 2", 2, "y^2+x^3+x*y*z+z^6");
    e.expect.charts = Charts::SomeSingular;
    out.push(e);
    out.push(surface(
        "e7t-fp",
        "simple elliptic E7~, F-pure, p = 2",
        2,
        "y^2+x*y*z+x^3*z+x*z^3",
    ));
    let mut e = surface("e6t-fp", "simple elliptic E6~, F-pure, p = 2", 2, "y^2*z+x*y*z+x^3+z^3");
    e.expect.charts = Charts::AllSmooth;
    out.push(e);

    let mut e = surface(
        "e8t-nfp3",
        "simple elliptic E8~, not F-pure, p = 3",
        3,
        "x*(x-z^2)*(x-2*z^2)-y^2",
    );
    e.expect.charts = Charts::SomeSingular;
    out.push(e);
    out.push(surface(
        "e8t-nfp2",
        "simple elliptic E8~, not F-pure, p = 2",
        2,
        "y^2+y*z^3+x^3",
    ));
    let mut e = surface(
        "e6t-nfp",
        "simple elliptic E6~, not F-pure, p = 2",
        2,
        "y^2*z+y*z^2+x^3",
    );
    e.expect.charts = Charts::AllSmooth;
    out.push(e);
    out
}

pub fn find(id: &str) -> Option<Entry> {
    entries().into_iter().find(|e| e.id == id)
}

/// Signature hashes of the entry's companions, by name.
pub fn companion_hashes(entry: &Entry, cfg: &Config) -> Result<Vec<(&'static str, String)>, CliError> {
    let ring = entry.spec.build(&Budget::default())?;
    entry
        .companions
        .iter()
        .map(|c| {
            let m = build_matrix(&ring, &c.matrix())?;
            let s = signature(&PresentedModule::new(m), cfg)?;
            Ok((c.name, signature_doc(&s).hash))
        })
        .collect()
}

/// Failed checks of an `e = 1` dossier, empty when all pass. Incomplete
/// dossiers are checked only on the parts that were computed.
pub fn check(entry: &Entry, d: &Dossier, cfg: &Config) -> Result<Vec<String>, CliError> {
    let mut fails = Vec::new();
    let p = entry.spec.characteristic as usize;
    let Some(push) = &d.pushforward else {
        return Ok(fails);
    };
    if let Some(rank) = push.rank {
        if rank != p * p {
            fails.push(format!("pushforward rank {rank}, expected {}", p * p));
        }
    }
    if d.kunz == Some(false) {
        fails.push("non-free locus differs from the singular locus".into());
    }
    let nonfree: Vec<_> = push
        .blocks
        .iter()
        .filter(|b| b.matrix.iter().flatten().any(|s| s != "0"))
        .collect();
    if let Some(want) = entry.expect.nonfree_classes {
        let mut classes: Vec<usize> = nonfree.iter().map(|b| b.class).collect();
        classes.sort_unstable();
        classes.dedup();
        if classes.len() != want {
            fails.push(format!("{} classes of non-free blocks, expected {want}", classes.len()));
        }
    }
    if let Some(want) = &entry.expect.nonfree_ranks {
        let mut ranks: Vec<usize> = nonfree.iter().map(|b| b.rank).collect();
        ranks.sort_unstable();
        if &ranks != want {
            fails.push(format!("non-free block ranks {ranks:?}, expected {want:?}"));
        }
    }
    if !entry.expect.companions_cover.is_empty() {
        let hashes = companion_hashes(entry, cfg)?;
        let wanted: Vec<&(&str, String)> = hashes
            .iter()
            .filter(|(n, _)| entry.expect.companions_cover.contains(n))
            .collect();
        for b in &nonfree {
            let Some(sig) = &b.signature else { continue };
            if !wanted.iter().any(|(_, h)| *h == sig.hash) {
                fails.push(format!("a {}x{} block matches no companion", b.shape[0], b.shape[1]));
            }
        }
        for (name, h) in &wanted {
            if !nonfree
                .iter()
                .any(|b| b.signature.as_ref().is_some_and(|s| &s.hash == h))
            {
                fails.push(format!("companion {name} does not occur"));
            }
        }
    }
    if let Some(want) = entry.expect.blocks {
        if push.blocks.len() != want {
            fails.push(format!("{} blocks, expected {want}", push.blocks.len()));
        }
    }
    if entry.expect.all_r1 && d.charts.iter().any(|c| c.r1 == Some(false)) {
        fails.push("a chart is not regular in codimension one".into());
    }
    let done: Vec<bool> = d.charts.iter().filter_map(|c| c.smooth).collect();
    match entry.expect.charts {
        Charts::AllSmooth if done.contains(&false) => fails.push("a chart is singular".into()),
        Charts::SomeSingular if d.is_complete() && !done.contains(&false) => fails.push("every chart is smooth".into()),
        _ => {}
    }
    Ok(fails)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_unique_and_rings_build() {
        let all = entries();
        let mut ids: Vec<&str> = all.iter().map(|e| e.id.as_str()).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), all.len());
        for e in &all {
            let ring = e.spec.build(&Budget::default()).unwrap();
            for c in &e.companions {
                build_matrix(&ring, &c.matrix()).unwrap();
            }
        }
    }

    #[test]
    fn duplicate_shares_its_ring() {
        let (a, b) = (find("e6-1").unwrap(), find("d4-1").unwrap());
        assert_eq!(a.duplicate_of, Some("d4-1"));
        assert_eq!(a.spec.relations, b.spec.relations);
    }

    #[test]
    fn transposed_companion() {
        let e = find("e6-0").unwrap();
        assert_eq!(e.companions[2].rows[0], vec!["x", "z", "0", "0"]);
        assert_eq!(e.companions[2].rows[3], vec!["0", "x*y", "y^2+z", "x^2"]);
    }

    #[test]
    fn d2n0_relation() {
        assert_eq!(d2n0(3).spec.relations, vec!["z^2+x^2*y+x*y^3".to_string()]);
    }
}
