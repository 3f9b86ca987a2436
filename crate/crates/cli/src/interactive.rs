//! The menu-driven session: draw faults, then watch the stress map evolve.

use std::io::{self, BufRead, Write};
use std::path::Path;
use std::thread;
use std::time::Duration;

use faultsim_core::{
    render_fault_map, render_stress_map, save_scenario, FaultMap, RenderStyle, Scenario, ShapeSpec,
    SimConfig, Simulation, StressBands, StressMap,
};

use crate::args::CliOptions;
use crate::setup::resolve;

pub const CLEAR_SCREEN: &str = "\x1b[2J\x1b[H";

pub const MENU: &str = "\
Fault shapes:
1) vertical line  2) horizontal line  3) circle  4) point-to-point line  5) start simulation  6) save scenario  7) quit
";

/// Runs the session on the given streams and returns the exit code.
pub fn run_interactive<R: BufRead, W: Write>(opts: &CliOptions, input: R, mut out: W) -> i32 {
    let (cfg, faults) = match resolve(opts) {
        Ok(setup) => setup,
        Err(e) => {
            let _ = writeln!(out, "error: {e}");
            return 1;
        }
    };
    let style = RenderStyle {
        color_enabled: !opts.no_color,
    };
    let mut session = Session {
        input,
        out: &mut out,
        cfg,
        faults,
        style,
    };
    session.menu_loop().unwrap_or(1)
}

struct Session<R, W> {
    input: R,
    out: W,
    cfg: SimConfig,
    faults: FaultMap,
    style: RenderStyle,
}

enum Choice {
    Shape(ShapeSpec),
    Start,
    Save,
    Quit,
}

impl<R: BufRead, W: Write> Session<R, W> {
    fn menu_loop(&mut self) -> io::Result<i32> {
        writeln!(
            self.out,
            "Earthquake fault simulator: {} grid, seed {}",
            self.cfg.dims, self.cfg.seed
        )?;
        loop {
            write!(self.out, "\n{MENU}")?;
            let Some(choice) = self.read_choice()? else {
                return self.input_closed();
            };
            match choice {
                Choice::Shape(shape) => match shape.draw(&mut self.faults) {
                    Ok(_) => self.print_fault_map()?,
                    Err(e) => writeln!(self.out, "Error: {e}. No fault was drawn.")?,
                },
                Choice::Start => return self.simulate(),
                Choice::Save => self.save()?,
                Choice::Quit => {
                    writeln!(self.out, "Goodbye.")?;
                    return Ok(0);
                }
            }
        }
    }

    fn input_closed(&mut self) -> io::Result<i32> {
        writeln!(self.out, "\nInput closed, exiting.")?;
        Ok(0)
    }

    /// `None` on end of input.
    fn read_line(&mut self, prompt: &str) -> io::Result<Option<String>> {
        write!(self.out, "{prompt}")?;
        self.out.flush()?;
        let mut line = String::new();
        if self.input.read_line(&mut line)? == 0 {
            return Ok(None);
        }
        Ok(Some(line.trim().to_string()))
    }

    fn read_int(&mut self, prompt: &str) -> io::Result<Option<i64>> {
        loop {
            let Some(line) = self.read_line(prompt)? else {
                return Ok(None);
            };
            match line.parse() {
                Ok(v) => return Ok(Some(v)),
                Err(_) => writeln!(self.out, "Please enter a whole number.")?,
            }
        }
    }

    fn read_choice(&mut self) -> io::Result<Option<Choice>> {
        loop {
            let Some(n) = self.read_int("Choice: ")? else {
                return Ok(None);
            };
            let shape = match n {
                1 => self.read_vertical()?,
                2 => self.read_horizontal()?,
                3 => self.read_circle()?,
                4 => self.read_segment()?,
                5 => return Ok(Some(Choice::Start)),
                6 => return Ok(Some(Choice::Save)),
                7 => return Ok(Some(Choice::Quit)),
                _ => {
                    writeln!(self.out, "Please choose an option from 1 to 7.")?;
                    continue;
                }
            };
            return Ok(shape.map(Choice::Shape));
        }
    }

    fn read_vertical(&mut self) -> io::Result<Option<ShapeSpec>> {
        Ok(self.read_int("x: ")?.map(|x| ShapeSpec::Vertical { x }))
    }

    fn read_horizontal(&mut self) -> io::Result<Option<ShapeSpec>> {
        Ok(self.read_int("y: ")?.map(|y| ShapeSpec::Horizontal { y }))
    }

    fn read_circle(&mut self) -> io::Result<Option<ShapeSpec>> {
        let Some(cx) = self.read_int("center x: ")? else {
            return Ok(None);
        };
        let Some(cy) = self.read_int("center y: ")? else {
            return Ok(None);
        };
        loop {
            let Some(r) = self.read_int("radius: ")? else {
                return Ok(None);
            };
            match u32::try_from(r) {
                Ok(r) => return Ok(Some(ShapeSpec::Circle { cx, cy, r })),
                Err(_) => writeln!(self.out, "The radius must be zero or more.")?,
            }
        }
    }

    fn read_segment(&mut self) -> io::Result<Option<ShapeSpec>> {
        let mut v = [0i64; 4];
        for (slot, prompt) in v.iter_mut().zip(["x0: ", "y0: ", "x1: ", "y1: "]) {
            let Some(n) = self.read_int(prompt)? else {
                return Ok(None);
            };
            *slot = n;
        }
        let [x0, y0, x1, y1] = v;
        Ok(Some(ShapeSpec::Segment { x0, y0, x1, y1 }))
    }

    fn print_fault_map(&mut self) -> io::Result<()> {
        writeln!(self.out, "Fault map:")?;
        self.out
            .write_all(render_fault_map(&self.faults, self.style).as_bytes())
    }

    fn stress_frame(&self, stress: &StressMap) -> String {
        let threshold = self.cfg.quake_threshold;
        render_stress_map(
            stress,
            StressBands::for_threshold(threshold),
            threshold,
            self.style,
        )
    }

    fn save(&mut self) -> io::Result<()> {
        let Some(path) = self.read_line("Save to file: ")? else {
            return Ok(());
        };
        let result = Scenario::new(self.cfg.clone(), self.faults.clone())
            .map_err(|e| e.to_string())
            .and_then(|s| {
                let file = std::fs::File::create(Path::new(&path)).map_err(|e| e.to_string())?;
                save_scenario(&s, file).map_err(|e| e.to_string())
            });
        match result {
            Ok(()) => writeln!(self.out, "Saved scenario to {path}"),
            Err(e) => writeln!(self.out, "Error: could not save {path}: {e}"),
        }
    }

    fn simulate(&mut self) -> io::Result<i32> {
        self.print_fault_map()?;
        let sim = match Simulation::new(self.faults.clone(), self.cfg.clone()) {
            Ok(sim) => sim,
            Err(e) => {
                writeln!(self.out, "error: {e}")?;
                return Ok(1);
            }
        };
        writeln!(self.out, "Surface stress:")?;
        let initial = self.stress_frame(sim.stress());
        self.out.write_all(initial.as_bytes())?;
        self.out.flush()?;

        let delay = Duration::from_millis(self.cfg.delay_ms);
        let target = self.cfg.target_quakes;
        let threshold = self.cfg.quake_threshold;
        let bands = StressBands::for_threshold(threshold);
        let style = self.style;
        let out = &mut self.out;
        let mut io_result = Ok(());
        let summary = sim.run_to_end(|report, stress| {
            if io_result.is_err() {
                return;
            }
            let mut frame = String::new();
            if style.color_enabled {
                frame.push_str(CLEAR_SCREEN);
            }
            frame.push_str(&format!(
                "Step {}: {} of {} earthquakes\n",
                report.step_index, report.cumulative_quakes, target
            ));
            let view = report.pre_reset_view(stress);
            frame.push_str(&render_stress_map(&view, bands, threshold, style));
            for cell in &report.quaked_cells {
                frame.push_str(&format!("EARTHQUAKE at {cell}!\n"));
            }
            io_result = out.write_all(frame.as_bytes()).and_then(|_| out.flush());
            if !delay.is_zero() {
                thread::sleep(delay);
            }
        });
        io_result?;

        if summary.hit_max_steps {
            writeln!(
                self.out,
                "Stopped after max_steps={}: {} of {} earthquakes (steps={} quakes={} seed={})",
                self.cfg.max_steps,
                summary.total_quakes,
                target,
                summary.total_steps,
                summary.total_quakes,
                self.cfg.seed
            )?;
        } else {
            writeln!(
                self.out,
                "Simulation complete: steps={} quakes={} seed={}",
                summary.total_steps, summary.total_quakes, self.cfg.seed
            )?;
        }
        Ok(0)
    }
}
