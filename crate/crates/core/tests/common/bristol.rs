//! A small Bristol Fashion reader and evaluator that shares no code with the
//! emitter.

pub struct Bristol {
    pub n_gates: usize,
    pub n_wires: usize,
    pub input_groups: Vec<usize>,
    pub output_groups: Vec<usize>,
    pub gates: Vec<(Vec<usize>, Vec<usize>, String)>,
}

fn numbers(line: &str) -> Vec<usize> {
    line.split_whitespace()
        .map(|t| t.parse().expect("number"))
        .collect()
}

impl Bristol {
    pub fn parse(text: &str) -> Bristol {
        let mut lines = text.lines();
        let head = numbers(lines.next().expect("header"));
        let ins = numbers(lines.next().expect("input line"));
        let outs = numbers(lines.next().expect("output line"));
        assert_eq!(head.len(), 2);
        assert_eq!(ins[0], ins.len() - 1);
        assert_eq!(outs[0], outs.len() - 1);
        let mut gates = Vec::new();
        for line in lines.filter(|l| !l.trim().is_empty()) {
            let tokens: Vec<&str> = line.split_whitespace().collect();
            let nin: usize = tokens[0].parse().unwrap();
            let nout: usize = tokens[1].parse().unwrap();
            assert_eq!(tokens.len(), 2 + nin + nout + 1, "{line}");
            let parse = |t: &[&str]| t.iter().map(|x| x.parse().unwrap()).collect::<Vec<usize>>();
            gates.push((
                parse(&tokens[2..2 + nin]),
                parse(&tokens[2 + nin..2 + nin + nout]),
                tokens[2 + nin + nout].to_string(),
            ));
        }
        assert_eq!(gates.len(), head[0]);
        Bristol {
            n_gates: head[0],
            n_wires: head[1],
            input_groups: ins[1..].to_vec(),
            output_groups: outs[1..].to_vec(),
            gates,
        }
    }

    pub fn n_inputs(&self) -> usize {
        self.input_groups.iter().sum()
    }

    pub fn n_outputs(&self) -> usize {
        self.output_groups.iter().sum()
    }

    /// Evaluate with every wire written at most once and read only after it
    /// is written. Outputs are the last wires.
    pub fn eval(&self, input: &[bool]) -> Vec<bool> {
        assert_eq!(input.len(), self.n_inputs());
        let mut wires: Vec<Option<bool>> = vec![None; self.n_wires];
        for (i, &b) in input.iter().enumerate() {
            wires[i] = Some(b);
        }
        let read = |wires: &[Option<bool>], w: usize| wires[w].expect("read before write");
        for (ins, outs, op) in &self.gates {
            let value = match op.as_str() {
                "AND" => read(&wires, ins[0]) & read(&wires, ins[1]),
                "XOR" => read(&wires, ins[0]) ^ read(&wires, ins[1]),
                "INV" => !read(&wires, ins[0]),
                "EQW" => read(&wires, ins[0]),
                "EQ" => match ins[0] {
                    0 => false,
                    1 => true,
                    other => panic!("EQ literal {other}"),
                },
                other => panic!("unknown op {other}"),
            };
            assert_eq!(outs.len(), 1);
            assert!(wires[outs[0]].is_none(), "wire {} written twice", outs[0]);
            wires[outs[0]] = Some(value);
        }
        let n = self.n_outputs();
        (self.n_wires - n..self.n_wires)
            .map(|w| read(&wires, w))
            .collect()
    }
}
