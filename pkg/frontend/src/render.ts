/**
 * Top-down scene painter. Draws the road band, lane markings, merge zone
 * shading, the goal line and every vehicle from the current view model.
 * All distances come from the server's geometry block, all poses from the
 * latest frame; nothing here integrates motion.
 *
 * The context parameter is the subset of CanvasRenderingContext2D the
 * painter touches, so tests can pass a recording stub.
 */

import { ViewModel } from "./viewmodel.js";
import { Vehicle } from "./protocol.js";

export interface Canvas2D {
  fillStyle: string | CanvasGradient | CanvasPattern;
  strokeStyle: string | CanvasGradient | CanvasPattern;
  lineWidth: number;
  font: string;
  textAlign: CanvasTextAlign;
  fillRect(x: number, y: number, w: number, h: number): void;
  strokeRect(x: number, y: number, w: number, h: number): void;
  beginPath(): void;
  moveTo(x: number, y: number): void;
  lineTo(x: number, y: number): void;
  stroke(): void;
  setLineDash(segments: number[]): void;
  fillText(text: string, x: number, y: number): void;
  save(): void;
  restore(): void;
  translate(x: number, y: number): void;
  rotate(angle: number): void;
}

export const PALETTE = {
  background: "#10151c",
  road: "#2e3440",
  mergeZone: "rgba(235, 203, 139, 0.18)",
  laneLine: "#d8dee9",
  goal: "#a3be8c",
  ego: "#2e9e4f",
  traffic: "#3b78c2",
  label: "#8fa1b3",
};

function laneDash(vm: ViewModel): number[] {
  return [1.5 * vm.pxPerMeter, 1.5 * vm.pxPerMeter];
}

function drawRoad(ctx: Canvas2D, vm: ViewModel, w: number, h: number): void {
  const geo = vm.geometry;
  const half = geo.lane_width / 2;
  const leftX = vm.screenToWorldX(0, w);
  const rightX = vm.screenToWorldX(w, w);

  // main lane runs the full visible length
  const [, mainTop] = vm.worldToScreen(0, geo.main_center - half, w, h);
  const [, mainBot] = vm.worldToScreen(0, geo.main_center + half, w, h);
  ctx.fillStyle = PALETTE.road;
  ctx.fillRect(0, mainTop, w, mainBot - mainTop);

  // the ramp lane exists up to the end of the merge zone
  const [rampEndX] = vm.worldToScreen(geo.merge_zone_end, 0, w, h);
  const [, rampTop] = vm.worldToScreen(0, geo.ramp_center - half, w, h);
  const [, rampBot] = vm.worldToScreen(0, geo.ramp_center + half, w, h);
  ctx.fillRect(0, rampTop, Math.min(rampEndX, w), rampBot - rampTop);

  // merge zone shading over the ramp lane
  const [mzStartX] = vm.worldToScreen(geo.merge_zone_start, 0, w, h);
  ctx.fillStyle = PALETTE.mergeZone;
  ctx.fillRect(mzStartX, rampTop, rampEndX - mzStartX, rampBot - rampTop);

  // solid outer edges
  ctx.strokeStyle = PALETTE.laneLine;
  ctx.lineWidth = 2;
  ctx.setLineDash([]);
  ctx.beginPath();
  ctx.moveTo(0, mainTop);
  ctx.lineTo(w, mainTop);
  ctx.moveTo(0, rampBot);
  ctx.lineTo(Math.min(rampEndX, w), rampBot);
  ctx.lineTo(Math.min(rampEndX, w), mainBot);
  ctx.moveTo(Math.min(rampEndX, w), mainBot);
  ctx.lineTo(w, mainBot);
  ctx.stroke();

  // dashed divider between the lanes while the ramp exists
  ctx.setLineDash(laneDash(vm));
  ctx.lineWidth = 1.5;
  ctx.beginPath();
  ctx.moveTo(0, mainBot);
  ctx.lineTo(Math.min(rampEndX, w), mainBot);
  ctx.stroke();
  ctx.setLineDash([]);

  // goal line
  const [goalX] = vm.worldToScreen(geo.goal_x, 0, w, h);
  if (goalX >= 0 && goalX <= w) {
    ctx.strokeStyle = PALETTE.goal;
    ctx.lineWidth = 2;
    ctx.setLineDash([6, 4]);
    ctx.beginPath();
    ctx.moveTo(goalX, mainTop - 12);
    ctx.lineTo(goalX, mainBot + 12);
    ctx.stroke();
    ctx.setLineDash([]);
    ctx.fillStyle = PALETTE.label;
    ctx.font = "12px sans-serif";
    ctx.textAlign = "center";
    ctx.fillText("goal", goalX, mainTop - 18);
  }

  // distance ticks every 50 m along the main lane edge
  ctx.fillStyle = PALETTE.label;
  ctx.font = "10px sans-serif";
  ctx.textAlign = "center";
  const firstTick = Math.ceil(leftX / 50) * 50;
  for (let x = firstTick; x <= rightX; x += 50) {
    const [sx] = vm.worldToScreen(x, 0, w, h);
    ctx.fillText(`${x} m`, sx, mainTop - 4);
  }
}

function drawVehicle(
  ctx: Canvas2D,
  vm: ViewModel,
  veh: Vehicle,
  w: number,
  h: number,
): void {
  const geo = vm.geometry;
  const [sx, sy] = vm.worldToScreen(veh.x, veh.y, w, h);
  const len = geo.car_length * vm.pxPerMeter;
  const wid = geo.car_width * vm.pxPerMeter;
  ctx.save();
  ctx.translate(sx, sy);
  ctx.rotate(veh.phi);
  ctx.fillStyle = veh.is_ego ? PALETTE.ego : PALETTE.traffic;
  ctx.fillRect(-len / 2, -wid / 2, len, wid);
  ctx.strokeStyle = PALETTE.laneLine;
  ctx.lineWidth = 1;
  ctx.strokeRect(-len / 2, -wid / 2, len, wid);
  // nose marker so heading is visible at a glance
  ctx.fillStyle = PALETTE.laneLine;
  ctx.fillRect(len / 2 - 3, -wid / 6, 3, wid / 3);
  ctx.restore();
}

/** Paint one full scene frame. */
export function drawScene(
  ctx: Canvas2D,
  vm: ViewModel,
  width: number,
  height: number,
): void {
  ctx.fillStyle = PALETTE.background;
  ctx.fillRect(0, 0, width, height);
  drawRoad(ctx, vm, width, height);
  for (const veh of vm.vehicles) {
    if (!veh.is_ego) drawVehicle(ctx, vm, veh, width, height);
  }
  const ego = vm.ego;
  if (ego) drawVehicle(ctx, vm, ego, width, height);
}
