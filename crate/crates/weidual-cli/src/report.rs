//! Report assembly and rendering.
//!
//! JSON reports are serialized from fixed structs, so identical inputs
//! and flags produce byte-identical output; timing goes to standard
//! error only.

use serde::Serialize;
use weidual::doc::InputDocument;
use weidual::{PartitionCheck, SingletonBound, WeightProfile};

#[derive(Serialize)]
pub struct Report {
    pub command: &'static str,
    pub input: InputEcho,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub valid: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub profile: Option<ProfileOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub feature_sets: Option<SetsOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sequences: Option<SequencesOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub singleton: Option<Vec<BoundOut>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pmd: Option<PmdOut>,
    pub verdicts: Vec<Verdict>,
    pub warnings: Vec<String>,
    /// The demi-matroid document backing the computation, emitted by
    /// `profile` so output can be fed back into `validate`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub demimatroid: Option<InputDocument>,
}

#[derive(Serialize)]
pub struct InputEcho {
    pub kind: &'static str,
    pub n: usize,
    pub k: usize,
}

#[derive(Serialize)]
pub struct ProfileOut {
    pub sigma: Vec<usize>,
    pub tau: Vec<usize>,
    pub smax: Vec<usize>,
    pub tmax: Vec<usize>,
    pub sigma_bar: Vec<usize>,
    pub tau_bar: Vec<usize>,
    pub smax_bar: Vec<usize>,
    pub tmax_bar: Vec<usize>,
}

impl ProfileOut {
    pub fn from(p: &WeightProfile) -> ProfileOut {
        ProfileOut {
            sigma: p.sigma.clone(),
            tau: p.tau.clone(),
            smax: p.smax.clone(),
            tmax: p.tmax.clone(),
            sigma_bar: p.sigma_bar.clone(),
            tau_bar: p.tau_bar.clone(),
            smax_bar: p.smax_bar.clone(),
            tmax_bar: p.tmax_bar.clone(),
        }
    }
}

#[derive(Serialize)]
pub struct SetsOut {
    pub s: Vec<usize>,
    pub t: Vec<usize>,
    pub u: Vec<usize>,
    pub v: Vec<usize>,
}

#[derive(Serialize)]
#[serde(untagged)]
pub enum SequencesOut {
    Matroid {
        f: Vec<usize>,
        fstar: Vec<usize>,
        s_m: Vec<usize>,
        t_m: Vec<usize>,
    },
    Graph {
        b: Vec<usize>,
        c: Vec<usize>,
        u_g: Vec<usize>,
        v_g: Vec<usize>,
    },
    Transversal {
        m: Vec<usize>,
        p: Vec<usize>,
        u_a: Vec<usize>,
        v_a: Vec<usize>,
        plugs: Vec<Vec<usize>>,
    },
    Code {
        d: Vec<usize>,
        d_perp: Vec<usize>,
        u_c: Vec<usize>,
        v_c: Vec<usize>,
        oracle_checked: bool,
    },
}

#[derive(Serialize)]
pub struct BoundOut {
    pub sequence: &'static str,
    pub index: usize,
    pub value: usize,
    pub bound: usize,
    pub satisfied: bool,
}

impl BoundOut {
    pub fn from(b: &SingletonBound) -> BoundOut {
        BoundOut {
            sequence: b.sequence,
            index: b.index,
            value: b.value,
            bound: b.bound,
            satisfied: b.satisfied,
        }
    }
}

#[derive(Serialize)]
pub struct PmdOut {
    pub is_pmd: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub flat_sizes: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub derived_fstar: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub computed_fstar: Option<Vec<usize>>,
}

#[derive(Serialize)]
pub struct Verdict {
    pub name: String,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Verdict {
    pub fn new(name: &str, ok: bool) -> Verdict {
        Verdict {
            name: name.to_string(),
            ok,
            detail: None,
        }
    }

    pub fn with_detail(name: &str, ok: bool, detail: String) -> Verdict {
        Verdict {
            name: name.to_string(),
            ok,
            detail: Some(detail),
        }
    }

    pub fn partition(name: &str, check: &PartitionCheck) -> Verdict {
        if check.ok {
            Verdict::new(name, true)
        } else {
            Verdict::with_detail(
                name,
                false,
                format!("missing {:?}, repeated {:?}", check.missing, check.repeated),
            )
        }
    }
}

impl Report {
    pub fn new(command: &'static str, kind: &'static str, n: usize, k: usize) -> Report {
        Report {
            command,
            input: InputEcho { kind, n, k },
            valid: None,
            profile: None,
            feature_sets: None,
            sequences: None,
            singleton: None,
            pmd: None,
            verdicts: Vec::new(),
            warnings: Vec::new(),
            demimatroid: None,
        }
    }

    pub fn all_ok(&self) -> bool {
        self.verdicts.iter().all(|v| v.ok)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    /// Plain-text rendering for terminals.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let fmt_set = |v: &[usize]| {
            let items: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            format!("{{{}}}", items.join(", "))
        };
        let fmt_seq = |v: &[usize]| {
            let items: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            format!("({})", items.join(", "))
        };
        out.push_str(&format!(
            "input: {} [n = {}, k = {}]\n",
            self.input.kind, self.input.n, self.input.k
        ));
        if let Some(valid) = self.valid {
            out.push_str(&format!("valid: {}\n", if valid { "yes" } else { "NO" }));
        }
        if let Some(p) = &self.profile {
            out.push_str(&format!("sigma     = {}\n", fmt_seq(&p.sigma)));
            out.push_str(&format!("tau       = {}\n", fmt_seq(&p.tau)));
            out.push_str(&format!("smax      = {}\n", fmt_seq(&p.smax)));
            out.push_str(&format!("tmax      = {}\n", fmt_seq(&p.tmax)));
            out.push_str(&format!("sigma_bar = {}\n", fmt_seq(&p.sigma_bar)));
            out.push_str(&format!("tau_bar   = {}\n", fmt_seq(&p.tau_bar)));
            out.push_str(&format!("smax_bar  = {}\n", fmt_seq(&p.smax_bar)));
            out.push_str(&format!("tmax_bar  = {}\n", fmt_seq(&p.tmax_bar)));
        }
        if let Some(sets) = &self.feature_sets {
            // The four sets side by side, S/U over T/V.
            out.push_str(&format!(
                "S = {:<16} U = {}\n",
                fmt_set(&sets.s),
                fmt_set(&sets.u)
            ));
            out.push_str(&format!(
                "T = {:<16} V = {}\n",
                fmt_set(&sets.t),
                fmt_set(&sets.v)
            ));
        }
        match &self.sequences {
            Some(SequencesOut::Matroid { f, fstar, s_m, t_m }) => {
                out.push_str(&format!("f      = {}\n", fmt_seq(f)));
                out.push_str(&format!("f*     = {}\n", fmt_seq(fstar)));
                out.push_str(&format!("S_M = {:<14} T_M = {}\n", fmt_set(s_m), fmt_set(t_m)));
            }
            Some(SequencesOut::Graph { b, c, u_g, v_g }) => {
                out.push_str(&format!("b = {:<18} c = {}\n", fmt_seq(b), fmt_seq(c)));
                out.push_str(&format!("U_G = {:<16} V_G = {}\n", fmt_set(u_g), fmt_set(v_g)));
            }
            Some(SequencesOut::Transversal { m, p, u_a, v_a, plugs }) => {
                out.push_str(&format!("m = {:<18} p = {}\n", fmt_seq(m), fmt_seq(p)));
                out.push_str(&format!("U_A = {:<16} V_A = {}\n", fmt_set(u_a), fmt_set(v_a)));
                let rendered: Vec<String> = plugs.iter().map(|p| fmt_set(p)).collect();
                out.push_str(&format!("plugs: {}\n", rendered.join(" ")));
            }
            Some(SequencesOut::Code { d, d_perp, u_c, v_c, oracle_checked }) => {
                out.push_str(&format!("d      = {:<13} d_perp = {}\n", fmt_seq(d), fmt_seq(d_perp)));
                out.push_str(&format!("U_C = {:<16} V_C = {}\n", fmt_set(u_c), fmt_set(v_c)));
                out.push_str(&format!(
                    "subcode enumeration cross-check: {}\n",
                    if *oracle_checked { "ran, agreed" } else { "skipped (size gate)" }
                ));
            }
            None => {}
        }
        if let Some(pmd) = &self.pmd {
            out.push_str(&format!("perfect matroid design: {}\n", if pmd.is_pmd { "yes" } else { "no" }));
            if let Some(sizes) = &pmd.flat_sizes {
                out.push_str(&format!("flat sizes by rank: {}\n", fmt_seq(sizes)));
            }
        }
        if let Some(bounds) = &self.singleton {
            let worst = bounds.iter().filter(|b| !b.satisfied).count();
            out.push_str(&format!(
                "singleton bounds: {} checked, {} violated\n",
                bounds.len(),
                worst
            ));
        }
        for v in &self.verdicts {
            out.push_str(&format!(
                "check {:<28} {}{}\n",
                v.name,
                if v.ok { "ok" } else { "FAILED" },
                v.detail.as_deref().map(|d| format!(" ({d})")).unwrap_or_default()
            ));
        }
        for w in &self.warnings {
            out.push_str(&format!("warning: {w}\n"));
        }
        out
    }
}
