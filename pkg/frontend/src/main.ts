import { GameApi } from "./api";
import { GameApp } from "./app";
import "./style.css";

const root = document.getElementById("app");
if (!root) {
  throw new Error("missing #app mount point");
}
new GameApp(root, new GameApi());
