/* Copyright 2026 The mhl Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef MHL_SESSION_SERVER_HPP
#define MHL_SESSION_SERVER_HPP

#include <functional>
#include <memory>
#include <string>

#include "mhl/session/api.hpp"

namespace mhl::session {

// JSON over HTTP: POST /api/<op> with a JSON body, GET /api/rules and
// GET /health. Replies carry the status of the underlying operation.
class HttpServer {
public:
    explicit HttpServer(SessionManager& manager);
    ~HttpServer();

    // Binds and blocks until stop(). Port 0 picks a free port.
    bool listen(const std::string& host, int port, const std::function<void(int)>& on_bound = {});
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace mhl::session

#endif
