//! Straight-line scalar recomputation of the recurrent cells, attention,
//! and the full planner/writer step pipelines. Weight matrices are plain
//! row-major `Vec<Vec<f64>>` (rows = output dimension).

pub type Mat = Vec<Vec<f64>>;

pub fn matvec(w: &Mat, x: &[f64]) -> Vec<f64> {
    w.iter()
        .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
        .collect()
}

pub fn add(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn hadamard(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x * y).collect()
}

pub fn concat(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().chain(b.iter()).copied().collect()
}

pub fn sigmoid(v: &[f64]) -> Vec<f64> {
    v.iter().map(|x| 1.0 / (1.0 + (-x).exp())).collect()
}

pub fn tanh(v: &[f64]) -> Vec<f64> {
    v.iter().map(|x| x.tanh()).collect()
}

pub fn softmax(v: &[f64]) -> Vec<f64> {
    let max = v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let exps: Vec<f64> = v.iter().map(|x| (x - max).exp()).collect();
    let sum: f64 = exps.iter().sum();
    exps.iter().map(|x| x / sum).collect()
}

/// z/r/candidate GRU parameters. `w*` multiply the input, `u*` the
/// previous hidden state.
pub struct GruParams {
    pub wz: Mat,
    pub uz: Mat,
    pub bz: Vec<f64>,
    pub wr: Mat,
    pub ur: Mat,
    pub br: Vec<f64>,
    pub wh: Mat,
    pub uh: Mat,
    pub bh: Vec<f64>,
}

pub fn gru_step(x: &[f64], h: &[f64], p: &GruParams) -> Vec<f64> {
    let z = sigmoid(&add(&add(&matvec(&p.wz, x), &matvec(&p.uz, h)), &p.bz));
    let r = sigmoid(&add(&add(&matvec(&p.wr, x), &matvec(&p.ur, h)), &p.br));
    let cand = tanh(&add(
        &add(&matvec(&p.wh, x), &matvec(&p.uh, &hadamard(&r, h))),
        &p.bh,
    ));
    // h' = (1 - z) o h + z o cand
    z.iter()
        .zip(h)
        .zip(&cand)
        .map(|((zi, hi), ci)| (1.0 - zi) * hi + zi * ci)
        .collect()
}

/// input/forget/output/candidate LSTM parameters.
pub struct LstmParams {
    pub wi: Mat,
    pub ui: Mat,
    pub bi: Vec<f64>,
    pub wf: Mat,
    pub uf: Mat,
    pub bf: Vec<f64>,
    pub wo: Mat,
    pub uo: Mat,
    pub bo: Vec<f64>,
    pub wg: Mat,
    pub ug: Mat,
    pub bg: Vec<f64>,
}

pub fn lstm_step(x: &[f64], h: &[f64], c: &[f64], p: &LstmParams) -> (Vec<f64>, Vec<f64>) {
    let i = sigmoid(&add(&add(&matvec(&p.wi, x), &matvec(&p.ui, h)), &p.bi));
    let f = sigmoid(&add(&add(&matvec(&p.wf, x), &matvec(&p.uf, h)), &p.bf));
    let o = sigmoid(&add(&add(&matvec(&p.wo, x), &matvec(&p.uo, h)), &p.bo));
    let g = tanh(&add(&add(&matvec(&p.wg, x), &matvec(&p.ug, h)), &p.bg));
    let c_new: Vec<f64> = f
        .iter()
        .zip(c)
        .zip(i.iter().zip(&g))
        .map(|((fi, ci), (ii, gi))| fi * ci + ii * gi)
        .collect();
    let h_new = hadamard(&o, &tanh(&c_new));
    (h_new, c_new)
}

/// Additive attention: e_t = v . tanh(Wq q + Wk k_t), weights = softmax,
/// context = sum of weighted keys (rows of `keys`).
pub struct AttParams {
    pub wq: Mat,
    pub wk: Mat,
    pub v: Vec<f64>,
}

pub fn attention(q: &[f64], keys: &Mat, p: &AttParams) -> (Vec<f64>, Vec<f64>) {
    let qp = matvec(&p.wq, q);
    let scores: Vec<f64> = keys
        .iter()
        .map(|k| {
            let t = tanh(&add(&qp, &matvec(&p.wk, k)));
            p.v.iter().zip(&t).map(|(a, b)| a * b).sum()
        })
        .collect();
    let weights = softmax(&scores);
    let dk = keys[0].len();
    let mut context = vec![0.0; dk];
    for (w, k) in weights.iter().zip(keys) {
        for (c, kv) in context.iter_mut().zip(k) {
            *c += w * kv;
        }
    }
    (context, weights)
}

pub struct MlpParams {
    pub w1: Mat,
    pub b1: Vec<f64>,
    pub w2: Mat,
    pub b2: Vec<f64>,
}

pub fn mlp(h: &[f64], p: &MlpParams) -> Vec<f64> {
    let hidden = tanh(&add(&matvec(&p.w1, h), &p.b1));
    add(&matvec(&p.w2, &hidden), &p.b2)
}

/// Bidirectional encoding of an embedded sequence: forward states and
/// backward states concatenated per position, both directions starting
/// from zero states.
pub fn bi_gru_encode(embs: &[Vec<f64>], fwd: &GruParams, bwd: &GruParams) -> Mat {
    let hidden = fwd.bz.len();
    let mut fwd_states = Vec::with_capacity(embs.len());
    let mut h = vec![0.0; hidden];
    for x in embs {
        h = gru_step(x, &h, fwd);
        fwd_states.push(h.clone());
    }
    let mut bwd_states = vec![Vec::new(); embs.len()];
    let mut hb = vec![0.0; hidden];
    for (t, x) in embs.iter().enumerate().rev() {
        hb = gru_step(x, &hb, bwd);
        bwd_states[t] = hb.clone();
    }
    fwd_states
        .iter()
        .zip(&bwd_states)
        .map(|(f, b)| concat(f, b))
        .collect()
}

pub fn bi_lstm_encode(embs: &[Vec<f64>], fwd: &LstmParams, bwd: &LstmParams) -> Mat {
    let hidden = fwd.bi.len();
    let mut fwd_states = Vec::with_capacity(embs.len());
    let (mut h, mut c) = (vec![0.0; hidden], vec![0.0; hidden]);
    for x in embs {
        let (nh, nc) = lstm_step(x, &h, &c, fwd);
        h = nh;
        c = nc;
        fwd_states.push(h.clone());
    }
    let mut bwd_states = vec![Vec::new(); embs.len()];
    let (mut hb, mut cb) = (vec![0.0; hidden], vec![0.0; hidden]);
    for (t, x) in embs.iter().enumerate().rev() {
        let (nh, nc) = lstm_step(x, &hb, &cb, bwd);
        hb = nh;
        cb = nc;
        bwd_states[t] = hb.clone();
    }
    fwd_states
        .iter()
        .zip(&bwd_states)
        .map(|(f, b)| concat(f, b))
        .collect()
}

/// Full parameter inventory of the gated-fusion (GRU-family) planner and
/// writer models.
pub struct DynModel {
    pub emb: Mat,
    pub enc_fwd: GruParams,
    pub enc_bwd: GruParams,
    pub wq_mean: Mat,
    pub att: AttParams,
    pub dec_y: GruParams,
    pub dec_w: GruParams,
    pub gate_w1: Mat,
    pub gate_w2: Mat,
    pub gate_wk: Mat,
    pub out: MlpParams,
}

/// Encode a context and return the attention-summarized vector that
/// seeds the decoder state: query = wq_mean . mean(encoder states).
pub fn dyn_context_vector(m: &DynModel, ctx_ids: &[usize]) -> Vec<f64> {
    let embs: Mat = ctx_ids.iter().map(|&id| m.emb[id].clone()).collect();
    let enc = bi_gru_encode(&embs, &m.enc_fwd, &m.enc_bwd);
    let dim = enc[0].len();
    let mut mean = vec![0.0; dim];
    for row in &enc {
        for (a, b) in mean.iter_mut().zip(row) {
            *a += b / enc.len() as f64;
        }
    }
    let q = matvec(&m.wq_mean, &mean);
    attention(&q, &enc, &m.att).0
}

/// One gated-fusion decoding step: two GRUs from the shared state, a
/// sigmoid fusion gate, an MLP over the fused vector. Returns the
/// next-token distribution and the fused vector (the new decoder state).
pub fn dyn_fused_step(
    m: &DynModel,
    state: &[f64],
    input_id: usize,
    cue_id: usize,
) -> (Vec<f64>, Vec<f64>) {
    let h_y = gru_step(&m.emb[input_id], state, &m.dec_y);
    let h_w = gru_step(&m.emb[cue_id], state, &m.dec_w);
    let hy_t = tanh(&matvec(&m.gate_w1, &h_y));
    let hw_t = tanh(&matvec(&m.gate_w2, &h_w));
    let k = sigmoid(&matvec(&m.gate_wk, &concat(&hy_t, &hw_t)));
    let fused: Vec<f64> = k
        .iter()
        .zip(&h_y)
        .zip(k.iter().zip(&h_w))
        .map(|((ki, yi), (kj, wi))| ki * yi + (1.0 - kj) * wi)
        .collect();
    let dist = softmax(&mlp(&fused, &m.out));
    (dist, fused)
}

/// Full parameter inventory of the LSTM-family seq2seq-with-attention
/// models.
pub struct SeqModel {
    pub emb: Mat,
    pub enc_fwd: LstmParams,
    pub enc_bwd: LstmParams,
    pub att: AttParams,
    pub dec: LstmParams,
    pub out: MlpParams,
}

/// Run the attentive decoder over `dec_input_ids` (the caller prepends
/// the start token) from zero states and return the distribution after
/// the last input.
pub fn seq2seq_next_dist(m: &SeqModel, enc_ids: &[usize], dec_input_ids: &[usize]) -> Vec<f64> {
    let embs: Mat = enc_ids.iter().map(|&id| m.emb[id].clone()).collect();
    let enc = bi_lstm_encode(&embs, &m.enc_fwd, &m.enc_bwd);
    let hidden = m.dec.bi.len();
    let (mut h, mut c) = (vec![0.0; hidden], vec![0.0; hidden]);
    let mut dist = Vec::new();
    for &id in dec_input_ids {
        let (context, _) = attention(&h, &enc, &m.att);
        let x = concat(&m.emb[id], &context);
        let (nh, nc) = lstm_step(&x, &h, &c, &m.dec);
        h = nh;
        c = nc;
        dist = softmax(&mlp(&h, &m.out));
    }
    dist
}
