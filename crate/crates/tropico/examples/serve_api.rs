//! Starts the HTTP service on a free local port, uploads a problem and
//! queries it the way the browser front end does.
//!
//!     cargo run --example serve_api

use std::io::{Read, Write};
use std::net::{SocketAddr, TcpStream};

use tropico::server::{router, AppState};

fn request(addr: SocketAddr, method: &str, path: &str, body: &str) -> String {
    let mut stream = TcpStream::connect(addr).unwrap();
    write!(
        stream,
        "{method} {path} HTTP/1.1\r\nHost: {addr}\r\nContent-Type: application/json\r\nContent-Length: {}\r\nConnection: close\r\n\r\n{body}",
        body.len()
    )
    .unwrap();
    let mut response = String::new();
    stream.read_to_string(&mut response).unwrap();
    let (head, body) = response.split_once("\r\n\r\n").unwrap();
    format!("{} -> {}", head.lines().next().unwrap(), body)
}

fn main() {
    let rt = tokio::runtime::Runtime::new().unwrap();
    let listener = rt
        .block_on(tokio::net::TcpListener::bind("127.0.0.1:0"))
        .unwrap();
    let addr = listener.local_addr().unwrap();
    rt.spawn(async move { axum::serve(listener, router(AppState::new(None), None)).await });
    println!("serving on http://{addr}");

    let problem = include_str!("data/four_alternatives.json");
    println!("{}", request(addr, "POST", "/api/problem", problem));
    println!("{}", request(addr, "GET", "/api/problem/1/frontier", ""));
    println!(
        "{}",
        request(addr, "GET", "/api/problem/1/solve?alpha=3", "")
    );
    println!(
        "{}",
        request(addr, "GET", "/api/problem/1/solve?alpha=5", "")
    );
    println!(
        "{}",
        request(addr, "GET", "/api/problem/1/error?x=1,0.25,0.5,0.25", "")
    );
    println!("{}", request(addr, "GET", "/api/problem/9/frontier", ""));
}
