/**
 * Post-episode kinematics charts. Once the close message arrives, the
 * buffered frame samples are drawn as four time series (speed,
 * acceleration, steering angle, yaw angle). Scaling happens per chart so
 * small steering angles stay readable next to full-range speeds.
 */

import { Canvas2D } from "./render.js";
import { KinSample } from "./viewmodel.js";

export interface Series {
  label: string;
  unit: string;
  times: number[];
  values: number[];
}

export function extractSeries(samples: KinSample[]): Series[] {
  const times = samples.map((s) => s.t);
  return [
    { label: "speed", unit: "m/s", times, values: samples.map((s) => s.v) },
    { label: "acceleration", unit: "m/s^2", times, values: samples.map((s) => s.accel) },
    { label: "steering", unit: "rad", times, values: samples.map((s) => s.steer) },
    { label: "yaw", unit: "rad", times, values: samples.map((s) => s.yaw) },
  ];
}

/**
 * Map a series onto chart pixels. Degenerate ranges (single sample or a
 * constant series) collapse to a horizontal line at mid-height rather
 * than dividing by zero.
 */
export function polylinePoints(
  times: number[],
  values: number[],
  width: number,
  height: number,
  pad = 28,
): Array<[number, number]> {
  if (times.length === 0) return [];
  const tMin = Math.min(...times);
  const tMax = Math.max(...times);
  const vMin = Math.min(...values);
  const vMax = Math.max(...values);
  const tSpan = tMax - tMin || 1;
  const vSpan = vMax - vMin || 1;
  const innerW = width - 2 * pad;
  const innerH = height - 2 * pad;
  return times.map((t, i) => {
    const x = pad + ((t - tMin) / tSpan) * innerW;
    const y =
      vMax === vMin
        ? pad + innerH / 2
        : pad + (1 - (values[i] - vMin) / vSpan) * innerH;
    return [x, y];
  });
}

const CHART_PALETTE = {
  background: "#10151c",
  frame: "#4c566a",
  line: "#88c0d0",
  text: "#d8dee9",
};

export function drawChart(
  ctx: Canvas2D,
  series: Series,
  width: number,
  height: number,
): void {
  const pad = 28;
  ctx.fillStyle = CHART_PALETTE.background;
  ctx.fillRect(0, 0, width, height);
  ctx.strokeStyle = CHART_PALETTE.frame;
  ctx.lineWidth = 1;
  ctx.setLineDash([]);
  ctx.strokeRect(pad, pad, width - 2 * pad, height - 2 * pad);

  const points = polylinePoints(series.times, series.values, width, height, pad);
  if (points.length > 0) {
    ctx.strokeStyle = CHART_PALETTE.line;
    ctx.lineWidth = 1.5;
    ctx.beginPath();
    ctx.moveTo(points[0][0], points[0][1]);
    for (const [x, y] of points.slice(1)) ctx.lineTo(x, y);
    ctx.stroke();
  }

  ctx.fillStyle = CHART_PALETTE.text;
  ctx.font = "11px sans-serif";
  ctx.textAlign = "left";
  ctx.fillText(`${series.label} (${series.unit})`, pad, pad - 8);
  if (series.values.length > 0) {
    const vMin = Math.min(...series.values);
    const vMax = Math.max(...series.values);
    ctx.fillText(vMax.toFixed(2), 2, pad + 4);
    ctx.fillText(vMin.toFixed(2), 2, height - pad);
  }
}
