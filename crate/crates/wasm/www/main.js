import init, { traceJson, scheduleCurvesJson, auditJson } from "./pkg/folded_prime_wasm.js";

const $ = (id) => document.getElementById(id);

function plot(canvas, series, opts = {}) {
  const ctx = canvas.getContext("2d");
  const { width: w, height: h } = canvas;
  const pad = 36;
  ctx.clearRect(0, 0, w, h);
  const xs = series.flatMap((s) => s.points.map((p) => p[0]));
  const ys = series.flatMap((s) => s.points.map((p) => p[1]));
  const x0 = Math.min(...xs), x1 = Math.max(...xs);
  const y0 = opts.yMin ?? Math.min(0, ...ys), y1 = Math.max(...ys);
  const sx = (x) => pad + ((x - x0) / (x1 - x0 || 1)) * (w - 2 * pad);
  const sy = (y) => h - pad - ((y - y0) / (y1 - y0 || 1)) * (h - 2 * pad);
  ctx.strokeStyle = "#999";
  ctx.strokeRect(pad, pad, w - 2 * pad, h - 2 * pad);
  ctx.fillStyle = "#555";
  ctx.fillText(String(y1), 2, pad);
  ctx.fillText(String(y0), 2, h - pad);
  ctx.fillText(String(x1), w - pad - 10, h - pad + 14);
  series.forEach((s, k) => {
    ctx.strokeStyle = s.color;
    ctx.beginPath();
    s.points.forEach(([x, y], n) => (n ? ctx.lineTo(sx(x), sy(y)) : ctx.moveTo(sx(x), sy(y))));
    ctx.stroke();
    ctx.fillStyle = s.color;
    ctx.fillText(s.label, pad + 8, pad + 14 + 14 * k);
  });
  if (opts.marker !== undefined) {
    ctx.strokeStyle = "#c00";
    ctx.beginPath();
    ctx.moveTo(sx(opts.marker), pad);
    ctx.lineTo(sx(opts.marker), h - pad);
    ctx.stroke();
  }
}

function guard(out, f) {
  try {
    out.classList.remove("err");
    f();
  } catch (e) {
    out.classList.add("err");
    out.textContent = String(e);
  }
}

function drawTrace() {
  const x = Number($("trace-x").value);
  $("trace-x-val").textContent = x;
  guard($("trace-out"), () => {
    const v = JSON.parse(traceJson(x, $("trace-schedule").value));
    const rows = v.trace.rows;
    plot($("trace-canvas"), [
      { label: "S(i)", color: "#1f77b4", points: rows.map((r) => [r.i, r.prefix]) },
      { label: "A(i,x) x (x+1)", color: "#2ca02c", points: rows.map((r) => [r.i, r.step * (x + 1)]) },
    ], { marker: v.flip ?? undefined });
    $("trace-out").textContent =
      `U(${x}) = ${v.trace.limit}, flip at i = ${v.flip ?? "beyond U"}, f(${x}) = ${v.trace.result}`;
  });
}

function drawCurves() {
  const n = Number($("curve-x").value);
  $("curve-x-val").textContent = n;
  guard($("curve-out"), () => {
    const c = JSON.parse(scheduleCurvesJson(n));
    const pts = (ys) => c.x.map((x, k) => [x, ys[k]]);
    plot($("curve-canvas"), [
      { label: "p(x+1)", color: "#d62728", points: pts(c.prime) },
      { label: "U_lin(x)", color: "#1f77b4", points: pts(c.u_lin) },
      { label: "lower bound", color: "#7f7f7f", points: pts(c.lower_bound.map((v, k) => (k >= 5 ? v : 0))) },
    ]);
    const last = c.x.length - 1;
    $("curve-out").textContent =
      `x = ${n}: p = ${c.prime[last]}, U_lin = ${c.u_lin[last]}, U_sq = ${c.u_sq[last]}, ` +
      `log2 W = ${c.willans_log2[last]}`;
  });
}

function drawAudit() {
  const u = Number($("audit-u").value);
  $("audit-u-val").textContent = u;
  guard($("audit-out"), () => {
    const pts = JSON.parse(auditJson(u, $("audit-variant").value));
    plot($("audit-canvas"), [
      { label: "naive (measured)", color: "#9467bd", points: pts.map((p) => [p.u, p.naive_measured]) },
      { label: "incremental (measured)", color: "#ff7f0e", points: pts.map((p) => [p.u, p.incremental_measured]) },
    ]);
    const ok = pts.every((p) => p.naive_measured === p.naive_predicted &&
      p.incremental_measured === p.incremental_predicted && p.step_floors === 2 * p.u);
    const end = pts[pts.length - 1];
    $("audit-out").textContent =
      `U = ${u}: naive ${end.naive_measured}, incremental ${end.incremental_measured}; ` +
      `closed forms ${ok ? "match" : "DO NOT match"} at every U`;
  });
}

await init();
$("trace-x").addEventListener("input", drawTrace);
$("trace-schedule").addEventListener("change", drawTrace);
$("curve-x").addEventListener("input", drawCurves);
$("audit-u").addEventListener("input", drawAudit);
$("audit-variant").addEventListener("change", drawAudit);
drawTrace();
drawCurves();
drawAudit();
