import init, { construct, marginGrid, cayley, randomSigmas } from "./pkg/sympleig_web.js";

const $ = (id) => document.getElementById(id);
let current = null;
let seed = 1;

function sigmasFromInputs() {
  return [0, 1, 2, 3]
    .map((i) => $("s" + i).value.trim())
    .filter((s) => s.length > 0)
    .map((s) => JSON.parse(s));
}

function fmtQ(q) {
  return "[" + q.map((v) => v.toFixed(4)).join(", ") + "]";
}

function runConstruct() {
  try {
    const view = JSON.parse(construct(JSON.stringify(sigmasFromInputs())));
    current = view;
    const r = view.result;
    const lines = [
      `branch  ${r.branch} (rank ${r.rank})`,
      `q       ${fmtQ(r.q)}`,
      `cos θ   ${r.cos_theta.toFixed(6)}    θ = ${r.theta.toFixed(6)}`,
      "",
      "idx  |Re(q̄σ) − cos θ|   margin₁     margin₂",
      ...r.residuals.map((x) =>
        `${x.index}    ${x.eigen_residual.toExponential(2)}          ${x.margins[0].toExponential(2)}  ${x.margins[1].toExponential(2)}`),
    ];
    $("summary").textContent = lines.join("\n");
    $("summary").className = "";
  } catch (e) {
    current = null;
    $("summary").textContent = String(e.message || e);
    $("summary").className = "err";
  }
  drawSphere();
  drawHeat();
  drawPath();
}

function drawSphere() {
  const c = $("sphere"), g = c.getContext("2d");
  const w = c.width, h = c.height, R = 0.42 * w;
  g.clearRect(0, 0, w, h);
  g.strokeStyle = "#999";
  g.beginPath(); g.arc(w / 2, h / 2, R, 0, 2 * Math.PI); g.stroke();
  const phi = $("view").value / 100;
  const tilt = 0.45;
  // orthographic projection after rotating about the vertical axis then tilting
  const project = ([x, y, z]) => {
    const x1 = Math.cos(phi) * x + Math.sin(phi) * y;
    const y1 = -Math.sin(phi) * x + Math.cos(phi) * y;
    const y2 = Math.cos(tilt) * z - Math.sin(tilt) * y1;
    const depth = Math.sin(tilt) * z + Math.cos(tilt) * y1;
    return [w / 2 + R * x1, h / 2 - R * y2, depth];
  };
  g.strokeStyle = "#ddd";
  for (const lat of [-60, -30, 0, 30, 60]) {
    g.beginPath();
    for (let k = 0; k <= 72; k++) {
      const a = (k / 72) * 2 * Math.PI, b = (lat * Math.PI) / 180;
      const [px, py] = project([Math.cos(b) * Math.cos(a), Math.cos(b) * Math.sin(a), Math.sin(b)]);
      k ? g.lineTo(px, py) : g.moveTo(px, py);
    }
    g.stroke();
  }
  if (!current) return;
  const colors = ["#d33", "#36c", "#2a2", "#c80"];
  current.omegas.forEach((o, i) => {
    const [px, py, d] = project([o[1], o[2], o[3]]);
    g.fillStyle = colors[i % 4];
    g.globalAlpha = d < 0 ? 0.35 : 1;
    g.beginPath(); g.arc(px, py, 7, 0, 2 * Math.PI); g.fill();
    g.globalAlpha = 1;
    g.fillText("σ" + (i + 1), px + 9, py - 6);
  });
}

function color(v, lo, hi) {
  const s = Math.min(1, Math.max(0, (v - lo) / (hi - lo)));
  const r = Math.round(255 * Math.min(1, 1.6 * s));
  const gg = Math.round(255 * Math.max(0, Math.min(1, 2 * s - 0.4)));
  const b = Math.round(80 + 120 * (1 - s));
  return [r, gg, b];
}

function selectedMatrix() {
  if (!current) return null;
  const which = document.querySelector("input[name=which]:checked").value;
  return current.result.matrices[Number(which)];
}

function drawHeat() {
  const c = $("heat"), g = c.getContext("2d");
  const m = selectedMatrix();
  if (!m) { g.clearRect(0, 0, c.width, c.height); return; }
  const nx = 240, ny = 120, gamma = $("gamma").value / 100;
  let vals;
  try {
    vals = marginGrid(JSON.stringify(m), gamma, nx, ny);
  } catch (e) {
    $("heatinfo").textContent = String(e.message || e);
    return;
  }
  const img = g.createImageData(nx, ny);
  let lo = Infinity, hi = -Infinity;
  for (const v of vals) { lo = Math.min(lo, v); hi = Math.max(hi, v); }
  lo = Math.max(lo, hi - 8);
  vals.forEach((v, i) => {
    const [r, gg, b] = color(v, lo, hi);
    img.data.set([r, gg, b, 255], 4 * i);
  });
  const off = new OffscreenCanvas(nx, ny);
  off.getContext("2d").putImageData(img, 0, 0);
  g.imageSmoothingEnabled = false;
  g.drawImage(off, 0, 0, c.width, c.height);
  $("heatinfo").textContent =
    `γ = ${gamma.toFixed(2)}\nlog₁₀ margin ∈ [${lo.toFixed(2)}, ${hi.toFixed(2)}]\nα ↓ 0..π, β → 0..2π`;
}

function drawPath() {
  const c = $("path"), g = c.getContext("2d");
  g.clearRect(0, 0, c.width, c.height);
  const m = selectedMatrix();
  if (!m) return;
  let view;
  try {
    view = JSON.parse(cayley(JSON.stringify(m), $("csigma").value, Number($("steps").value)));
  } catch (e) {
    $("cinfo").textContent = String(e.message || e);
    $("cinfo").className = "err";
    return;
  }
  $("cinfo").className = "";
  const pts = view.path;
  const W = c.width, H = c.height, pad = 30;
  const x = (t) => pad + (W - 2 * pad) * t;
  const series = [
    { label: "log₁₀ margin", color: "#36c", ys: pts.map((p) => Math.log10(p.margin)) },
    { label: "distance to −σI", color: "#d33", ys: view.distance_to_end },
  ];
  const all = series.flatMap((s) => s.ys);
  const lo = Math.min(...all, 0), hi = Math.max(...all, 1);
  const y = (v) => H - pad - ((H - 2 * pad) * (v - lo)) / (hi - lo);
  g.strokeStyle = "#999";
  g.strokeRect(pad, pad, W - 2 * pad, H - 2 * pad);
  g.fillStyle = "#555";
  g.fillText("t = 0", pad - 10, H - 10);
  g.fillText("t = 1", W - pad - 10, H - 10);
  series.forEach((s, k) => {
    g.strokeStyle = s.color;
    g.beginPath();
    pts.forEach((p, i) => (i ? g.lineTo(x(p.t), y(s.ys[i])) : g.moveTo(x(p.t), y(s.ys[i]))));
    g.stroke();
    g.fillStyle = s.color;
    g.fillText(s.label, pad + 8, pad + 14 + 14 * k);
  });
  const worst = Math.max(...pts.map((p) => p.symplectic_residual));
  $("cinfo").textContent =
    `${pts.length} points, t from 1 to 0\nmax symplectic residual ${worst.toExponential(2)}\n` +
    `min margin ${Math.min(...pts.map((p) => p.margin)).toExponential(3)}`;
}

await init();
$("run").onclick = runConstruct;
$("basis").onclick = () => {
  ["[1,0,0,0]", "[0,1,0,0]", "[0,0,1,0]", "[0,0,0,1]"].forEach((v, i) => ($("s" + i).value = v));
  runConstruct();
};
$("random").onclick = () => {
  JSON.parse(randomSigmas(seed++)).forEach((q, i) => ($("s" + i).value = JSON.stringify(q)));
  runConstruct();
};
$("view").oninput = drawSphere;
$("gamma").oninput = drawHeat;
$("steps").oninput = drawPath;
$("csigma").onchange = drawPath;
document.querySelectorAll("input[name=which]").forEach((r) => (r.onchange = () => { drawHeat(); drawPath(); }));
runConstruct();
