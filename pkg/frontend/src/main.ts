import { ApiClient } from "./api.js";
import { App } from "./app.js";

declare global {
  interface Window {
    FWMINER_API_BASE?: string;
  }
}

function bootstrap(): void {
  const root = document.getElementById("app");
  if (!root) throw new Error("missing #app container");
  const app = new App(root, new ApiClient(window.FWMINER_API_BASE ?? ""));
  void app.init();
}

if (document.readyState === "loading") {
  document.addEventListener("DOMContentLoaded", bootstrap);
} else {
  bootstrap();
}
