#pragma once

#define L1PDE_VERSION "0.1.0"
