#pragma once

#define SBM_VERSION_STRING "0.1.0"
