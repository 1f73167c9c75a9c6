/*
 * Copyright 2026 The epifit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
// Regenerates data/fixtures/cases_synthetic.csv.
#include "epifit/data_ingest.hpp"
#include "epifit/synthetic.hpp"

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: make_synthetic_cases <output.csv>\n";
        return 1;
    }
    std::ofstream out(argv[1], std::ios::binary);
    out << epifit::serialize_case_csv(epifit::synthetic::default_fixture());
    return out ? 0 : 2;
}
